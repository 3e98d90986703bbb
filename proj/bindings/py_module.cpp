#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alice/codec.hpp"
#include "alice/descriptor.hpp"
#include "alice/engine.hpp"
#include "alice/mltest.hpp"
#include "alice/oracle.hpp"
#include "alice/vm.hpp"

namespace py = pybind11;
using namespace alice;

namespace {

BitString bits(const std::string& s) { return BitString(s); }

Scheme scheme_of(const std::string& name, Nat num, Nat den) {
  if (name == "plain") return Scheme::plain();
  if (name == "b") return Scheme::b_feature(num, den);
  if (name == "b-early") return Scheme::b_feature_early(num, den);
  throw std::invalid_argument("unknown scheme " + name);
}

py::dict outcome_dict(const RunOutcome& out) {
  py::dict d;
  switch (out.kind) {
    case RunOutcome::Kind::Halted: d["status"] = "halted"; break;
    case RunOutcome::Kind::Failed: d["status"] = "failed"; break;
    case RunOutcome::Kind::OutOfFuel: d["status"] = "out_of_fuel"; break;
  }
  d["output"] = out.output.str();
  d["steps"] = out.steps;
  if (out.kind == RunOutcome::Kind::Failed)
    d["reason"] = fail_reason_name(out.reason);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "incremental feature-chain compression core";

  mod.def("nat_to_bits", [](Nat n) { return nat_to_bits(n).str(); });
  mod.def("bits_to_nat", [](const std::string& s) { return bits_to_nat(bits(s)); });
  mod.def("e1_encode", [](const std::string& s) { return e1_encode(bits(s)).str(); });
  mod.def("e2_encode", [](const std::string& s) { return e2_encode(bits(s)).str(); });
  mod.def("e1_decode", [](const std::string& s) {
    auto [payload, rest] = e1_decode(bits(s));
    return py::make_tuple(payload.str(), rest.str());
  });
  mod.def("e2_decode", [](const std::string& s) {
    auto [payload, rest] = e2_decode(bits(s));
    return py::make_tuple(payload.str(), rest.str());
  });

  mod.def(
      "run_program",
      [](const std::string& wire, const std::string& input, Nat fuel) {
        auto [prog, rest] = parse_program(bits(wire));
        if (!rest.empty())
          throw std::invalid_argument("trailing bits after program wire");
        return outcome_dict(run(prog, bits(input), fuel));
      },
      py::arg("wire"), py::arg("input"), py::arg("fuel") = Nat{1} << 20);

  mod.def(
      "compress",
      [](const std::string& x_bits, Nat budget, const std::string& scheme,
         Nat b_num, Nat b_den, std::size_t max_a_len) {
        BitString x = bits(x_bits);
        SearchConfig cfg;
        cfg.budget = budget;
        cfg.scheme = scheme_of(scheme, b_num, b_den);
        cfg.max_a_len = max_a_len;
        GreedyResult g = greedy_alice(x, cfg);
        Description chained = description_from_greedy(g);
        Description trivial = trivial_description(x);
        const Description& d =
            chained.wire_length() < trivial.wire_length() ? chained : trivial;
        py::dict r;
        r["wire"] = d.wire().str();
        r["depth"] = d.depth;
        r["wire_bits"] = d.wire_length();
        r["input_bits"] = x.size();
        r["budget_used"] = g.budget_used;
        r["space_exhausted"] = g.space_exhausted;
        py::list feats;
        for (const BitString& f : d.features) feats.append(f.str());
        r["features"] = feats;
        r["residual"] = d.residual.str();
        return r;
      },
      py::arg("x"), py::arg("budget") = Nat{10'000'000},
      py::arg("scheme") = "plain", py::arg("b_num") = Nat{2},
      py::arg("b_den") = Nat{1}, py::arg("max_a_len") = std::size_t{16});

  mod.def("expand", [](const std::string& wire) {
    return expand_description(parse_description(bits(wire))).str();
  });

  mod.def("pack", [](const std::string& payload) {
    auto bytes = pack_container(bits(payload));
    return py::bytes(reinterpret_cast<const char*>(bytes.data()),
                     bytes.size());
  });
  mod.def("unpack", [](const py::bytes& raw) {
    std::string s = raw;
    std::vector<std::uint8_t> bytes(s.begin(), s.end());
    return unpack_container(bytes).str();
  });

  mod.def(
      "phi",
      [](const std::string& feature_wire, const std::string& x, Nat fuel) {
        auto [prog, rest] = parse_program(bits(feature_wire));
        if (!rest.empty())
          throw std::invalid_argument("trailing bits after program wire");
        PhiResult p = phi(prog, bits(x), fuel);
        py::dict d;
        d["value"] = p.value;
        d["runs"] = p.runs;
        if (p.witness) d["witness"] = p.witness->str();
        return d;
      },
      py::arg("feature_wire"), py::arg("x"), py::arg("fuel") = Nat{1} << 16);

  mod.def(
      "bounded_complexity",
      [](const std::string& x, std::size_t max_pair_len, Nat step_cap) {
        OracleCaps caps{max_pair_len, step_cap};
        ComplexityResult r = bounded_complexity(bits(x), caps);
        py::dict d;
        d["value"] = r.value;
        d["exact"] = r.exact;
        if (r.witness) {
          d["program_wire"] = r.witness->program_wire.str();
          d["input"] = r.witness->input.str();
        }
        return d;
      },
      py::arg("x"), py::arg("max_pair_len") = std::size_t{14},
      py::arg("step_cap") = Nat{1} << 12);

  py::register_exception<NotATest>(mod, "NotATest");
  py::register_exception<IndexOutOfRange>(mod, "IndexOutOfRange");

  py::class_<HostFeature>(mod, "HostFeature")
      .def(py::init([](const std::string& kind, std::size_t n, std::size_t m) {
             TestKind k;
             if (kind == "leading-zeros")
               k = TestKind::LeadingZeros;
             else if (kind == "odd-ones")
               k = TestKind::OddPositionOnes;
             else
               throw std::invalid_argument("unknown kind " + kind);
             return HostFeature(k, n, m);
           }),
           py::arg("kind"), py::arg("n"), py::arg("m"))
      .def_property_readonly("n", &HostFeature::n)
      .def_property_readonly("m", &HostFeature::m)
      .def_property_readonly("nominal_length", &HostFeature::nominal_length)
      .def_property_readonly("family_size", &HostFeature::family_size)
      .def("contains",
           [](const HostFeature& h, const std::string& x) {
             return h.contains(bits(x));
           })
      .def("encode",
           [](const HostFeature& h, const std::string& x) {
             return h.encode(bits(x)).str();
           })
      .def("decode", [](const HostFeature& h, const std::string& r) {
        return h.decode(bits(r)).str();
      });

  mod.attr("__version__") = "0.1.0";
}
