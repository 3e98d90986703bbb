#include "alice/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "alice/codec.hpp"
#include "alice/descriptor.hpp"
#include "alice/engine.hpp"
#include "alice/mltest.hpp"
#include "alice/oracle.hpp"
#include "alice/report.hpp"

namespace alice {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;
constexpr int kExitMismatch = 4;

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DescriptorError("cannot open " + path);
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(f), {});
}

void write_file_bytes(const std::string& path,
                      const std::vector<std::uint8_t>& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DescriptorError("cannot open " + path + " for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!f) throw DescriptorError("write failed for " + path);
}

BitString load_input(const std::string& in_path, const std::string& bits) {
  if (!bits.empty()) return BitString(bits);
  auto bytes = read_file_bytes(in_path);
  return bits_from_bytes(bytes, bytes.size() * 8);
}

void maybe_write_report(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw DescriptorError("cannot open " + path + " for writing");
  f << j.dump(2) << "\n";
}

Scheme scheme_from_flags(const std::string& name, Nat num, Nat den) {
  if (name == "plain") return Scheme::plain();
  if (name == "b") return Scheme::b_feature(num, den);
  if (name == "b-early") return Scheme::b_feature_early(num, den);
  throw CLI::ValidationError("--scheme", "unknown scheme " + name);
}

Program program_from_wire(const std::string& wire_bits) {
  auto [prog, rest] = parse_program(BitString(wire_bits));
  if (!rest.empty())
    throw MalformedDescription("trailing bits after program wire");
  return prog;
}

BitString make_layered(std::size_t n, std::size_t m) {
  BitString x;
  for (std::size_t i = 0; i <= m; ++i) {
    x.append_run(1, n + i);
    x.push_back(0);
  }
  return x;
}

struct CompressArgs {
  std::string in_path, bits, out_path, report_path;
  std::string scheme = "plain";
  Nat b_num = 2, b_den = 1;
  Nat budget = 10'000'000;
  std::size_t max_a_len = 16;
  std::optional<Nat> node_step_cap;
};

int do_compress(const CompressArgs& a) {
  BitString x = load_input(a.in_path, a.bits);
  SearchConfig cfg;
  cfg.budget = a.budget;
  cfg.scheme = scheme_from_flags(a.scheme, a.b_num, a.b_den);
  cfg.max_a_len = a.max_a_len;
  cfg.node_step_cap = a.node_step_cap;
  GreedyResult g = greedy_alice(x, cfg);
  Description chained = description_from_greedy(g);
  Description trivial = trivial_description(x);
  bool use_chained = chained.wire_length() < trivial.wire_length();
  const Description& d = use_chained ? chained : trivial;
  if (!verify_description(d, x))
    throw ChainBroken("description does not expand back to the input");
  if (!a.out_path.empty()) write_container_file(a.out_path, d.wire());
  Json rep = json_greedy(x, g, cfg);
  rep["chosen"] = use_chained ? "chained" : "trivial";
  rep["description"] = json_description(d);
  maybe_write_report(a.report_path, rep);
  std::cout << "in=" << x.size() << " bits out=" << d.wire_length()
            << " bits depth=" << d.depth << " scheme=" << cfg.scheme.name()
            << "\n";
  return kExitOk;
}

int do_decompress(const std::string& in_path, const std::string& out_path,
                  bool print_bits) {
  BitString payload = read_container_file(in_path);
  Description d = parse_description(payload);
  BitString x = expand_description(d);
  if (print_bits || out_path.empty()) {
    std::cout << x.str() << "\n";
    return kExitOk;
  }
  if (x.size() % 8 != 0)
    throw DescriptorError("expanded payload is not byte aligned; use --print");
  write_file_bytes(out_path, bytes_from_bits(x));
  return kExitOk;
}

int do_verify(const std::string& in_path, const std::string& against_path,
              const std::string& against_bits) {
  BitString payload = read_container_file(in_path);
  Description d = parse_description(payload);
  BitString x = load_input(against_path, against_bits);
  if (!verify_description(d, x)) {
    std::cout << "mismatch\n";
    return kExitMismatch;
  }
  std::cout << "ok depth=" << d.depth << " wire=" << d.wire_length()
            << " bits\n";
  return kExitOk;
}

struct OracleArgs {
  std::string bits, report_path;
  std::size_t max_a_len = 14;
  std::size_t max_pair_len = 14;
  Nat step_cap = Nat{1} << 12;
  bool want_features = false;
};

int do_oracle(const OracleArgs& a) {
  BitString x(a.bits);
  Json rep;
  auto aw = first_accepting_awire(x, a.max_a_len, a.step_cap, Scheme::plain());
  rep["awire"] = json_awire(aw);
  OracleCaps caps{a.max_pair_len, a.step_cap};
  rep["complexity"] = json_complexity(bounded_complexity(x, caps));
  if (a.want_features) {
    auto fr = shortest_bounded_features(x, caps, Scheme::plain());
    Json f;
    f["wire_length"] = fr.wire_length;
    Json ws = Json::array();
    for (const BitString& w : fr.wires) ws.push_back(w.str());
    f["wires"] = ws;
    f["programs_tried"] = fr.programs_tried;
    rep["features"] = f;
  }
  maybe_write_report(a.report_path, rep);
  std::cout << rep.dump(2) << "\n";
  return kExitOk;
}

struct MltestArgs {
  std::string feature_wire, bits, kind = "leading-zeros", report_path;
  std::string encode_bits, decode_bits;
  std::size_t n = 0, m = 0;
  Nat fuel = Nat{1} << 16;
  bool bound = false;
};

int do_mltest(const MltestArgs& a) {
  Json rep;
  if (!a.feature_wire.empty()) {
    Program f = program_from_wire(a.feature_wire);
    if (a.bound) {
      rep["power_bound"] = json_power_bound(power_bound_check(f, a.n, a.fuel));
    } else {
      PhiResult p = phi(f, BitString(a.bits), a.fuel);
      Json pj;
      pj["value"] = p.value;
      pj["runs"] = p.runs;
      if (p.witness) pj["witness"] = p.witness->str();
      rep["phi"] = pj;
    }
  } else {
    TestKind kind;
    if (a.kind == "leading-zeros")
      kind = TestKind::LeadingZeros;
    else if (a.kind == "odd-ones")
      kind = TestKind::OddPositionOnes;
    else
      throw CLI::ValidationError("--kind", "unknown kind " + a.kind);
    HostFeature hf(kind, a.n, a.m);
    Json fj;
    fj["n"] = hf.n();
    fj["m"] = hf.m();
    fj["nominal_length"] = hf.nominal_length();
    fj["family_size"] = hf.family_size();
    if (!a.encode_bits.empty())
      fj["encoded"] = hf.encode(BitString(a.encode_bits)).str();
    if (!a.decode_bits.empty())
      fj["decoded"] = hf.decode(BitString(a.decode_bits)).str();
    rep["family"] = fj;
  }
  maybe_write_report(a.report_path, rep);
  std::cout << rep.dump(2) << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::string bits, report_path;
  std::size_t layer_n = 40, layer_m = 4;
  bool layered = false;
  Nat budget = 10'000'000;
  Nat step_cap = Nat{1} << 12;
  std::size_t max_a_len = 16;
};

int do_bench(const BenchArgs& a) {
  BitString x = a.layered ? make_layered(a.layer_n, a.layer_m)
                          : BitString(a.bits);
  SearchConfig cfg;
  cfg.budget = a.budget;
  cfg.max_a_len = a.max_a_len;
  GreedyResult g = greedy_alice(x, cfg);
  Description d = description_from_greedy(g);
  SingleProgramResult base =
      shortest_printer(x, d.wire_length(), a.step_cap, a.budget);
  Nat fit_c = 0;
  for (Nat c = 1; c <= 64; ++c) {
    if (predicted_budget_covers(g.steps, c, g.budget_used)) {
      fit_c = c;
      break;
    }
  }
  Json rep;
  rep["input_bits"] = x.size();
  rep["greedy"] = json_greedy(x, g, cfg);
  rep["description_bits"] = d.wire_length();
  Json bj;
  bj["found"] = base.wire.has_value();
  if (base.wire) bj["wire"] = base.wire->str();
  bj["runs"] = base.runs;
  bj["budget_used"] = base.budget_used;
  bj["budget_exhausted"] = base.budget_exhausted;
  bj["max_wire_len_reached"] = base.max_wire_len_reached;
  rep["single_program"] = bj;
  rep["measured_units"] = g.budget_used;
  if (!g.steps.empty()) {
    rep["predicted_budget_c1"] = predicted_budget(g.steps, 1);
    rep["fit_c"] = fit_c;
  }
  maybe_write_report(a.report_path, rep);
  std::cout << rep.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"incremental feature-chain compressor"};
  app.require_subcommand(1);

  CompressArgs ca;
  auto* comp = app.add_subcommand("compress", "search for a feature chain");
  comp->add_option("--in", ca.in_path, "input file (bytes)");
  comp->add_option("--bits", ca.bits, "input as a 0/1 string");
  comp->add_option("--out", ca.out_path, "output container path");
  comp->add_option("--report", ca.report_path, "write a JSON report");
  comp->add_option("--scheme", ca.scheme, "plain, b, or b-early");
  comp->add_option("--b-num", ca.b_num, "residual bound numerator");
  comp->add_option("--b-den", ca.b_den, "residual bound denominator");
  comp->add_option("--budget", ca.budget, "search budget in steps");
  comp->add_option("--max-a-len", ca.max_a_len, "candidate wire length cap")
      ->envname("ALICE_MAX_A_LEN");
  Nat comp_cap = 0;
  auto* cap_opt =
      comp->add_option("--node-step-cap", comp_cap, "per-candidate step cap");

  std::string d_in, d_out;
  bool d_print = false;
  auto* dec = app.add_subcommand("decompress", "expand a container");
  dec->add_option("--in", d_in, "container path")->required();
  dec->add_option("--out", d_out, "output file (bytes)");
  dec->add_flag("--print", d_print, "print bits to stdout");

  std::string v_in, v_against, v_bits;
  auto* ver = app.add_subcommand("verify", "check a container against input");
  ver->add_option("--in", v_in, "container path")->required();
  ver->add_option("--against", v_against, "original file");
  ver->add_option("--bits", v_bits, "original as a 0/1 string");

  OracleArgs oa;
  auto* ora = app.add_subcommand("oracle", "exhaustive reference searches");
  ora->add_option("--bits", oa.bits, "input as a 0/1 string")->required();
  ora->add_option("--max-a-len", oa.max_a_len, "candidate wire length cap");
  ora->add_option("--max-pair-len", oa.max_pair_len, "pair length cap");
  ora->add_option("--step-cap", oa.step_cap, "per-run fuel");
  ora->add_flag("--features", oa.want_features, "also list shortest features");
  ora->add_option("--report", oa.report_path, "write a JSON report");

  MltestArgs ma;
  auto* ml = app.add_subcommand("mltest", "feature power and test families");
  ml->add_option("--feature", ma.feature_wire, "feature program wire");
  ml->add_option("--bits", ma.bits, "input as a 0/1 string");
  ml->add_flag("--bound", ma.bound, "sweep all strings of length n");
  ml->add_option("--kind", ma.kind, "leading-zeros or odd-ones");
  ml->add_option("--n", ma.n, "string length");
  ml->add_option("--m", ma.m, "test level");
  ml->add_option("--fuel", ma.fuel, "per-run fuel");
  ml->add_option("--encode", ma.encode_bits, "family member to encode");
  ml->add_option("--decode", ma.decode_bits, "index residual to decode");
  ml->add_option("--report", ma.report_path, "write a JSON report");

  BenchArgs ba;
  auto* be = app.add_subcommand("bench", "greedy chain vs single programs");
  be->add_option("--bits", ba.bits, "input as a 0/1 string");
  be->add_flag("--layered", ba.layered, "use the built-in layered input");
  be->add_option("--layer-n", ba.layer_n, "layered input base run");
  be->add_option("--layer-m", ba.layer_m, "layered input extra runs");
  be->add_option("--budget", ba.budget, "search budget in steps");
  be->add_option("--step-cap", ba.step_cap, "per-run fuel for the baseline");
  be->add_option("--max-a-len", ba.max_a_len, "candidate wire length cap")
      ->envname("ALICE_MAX_A_LEN");
  be->add_option("--report", ba.report_path, "write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (comp->parsed()) {
      if (cap_opt->count() > 0) ca.node_step_cap = comp_cap;
      return do_compress(ca);
    }
    if (dec->parsed()) return do_decompress(d_in, d_out, d_print);
    if (ver->parsed()) return do_verify(v_in, v_against, v_bits);
    if (ora->parsed()) return do_oracle(oa);
    if (ml->parsed()) return do_mltest(ma);
    if (be->parsed()) return do_bench(ba);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DescriptorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const MalformedCode& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const MalformedProgram& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  }
  return kExitUsage;
}

}  // namespace alice
