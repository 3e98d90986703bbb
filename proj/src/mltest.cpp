#include "alice/mltest.hpp"

#include <algorithm>

namespace alice {

PhiResult phi(const Program& feature, const BitString& x, Nat fuel,
              std::size_t max_residual_len) {
  PhiResult res;
  std::size_t lf = feature.wire_length();
  if (x.size() <= lf) return res;
  std::size_t max_r = x.size() - lf;
  for (std::size_t lr = 0; lr < max_r && lr <= max_residual_len; ++lr) {
    if (lr >= 40) throw std::invalid_argument("residual sweep too wide");
    Nat total = Nat{1} << lr;
    for (Nat v = 0; v < total; ++v) {
      BitString r = bits_of_value(v, lr);
      RunOutcome out = run(feature, r, fuel);
      ++res.runs;
      if (out.halted() && out.output == x) {
        res.value = static_cast<Nat>(x.size() - lr - 1);
        res.witness = std::move(r);
        return res;
      }
    }
  }
  return res;
}

PowerBoundReport power_bound_check(const Program& feature, std::size_t n,
                                   Nat fuel) {
  if (n > 16) throw std::invalid_argument("power bound sweep too wide");
  PowerBoundReport rep;
  rep.n = n;
  if (n == 0) return rep;
  rep.count_at_least.assign(n, 0);
  Nat total = Nat{1} << n;
  for (Nat v = 0; v < total; ++v) {
    BitString x = bits_of_value(v, n);
    PhiResult p = phi(feature, x, fuel, n);
    for (Nat m = 1; m <= p.value && m <= static_cast<Nat>(n); ++m)
      ++rep.count_at_least[static_cast<std::size_t>(m) - 1];
  }
  for (std::size_t m = 1; m <= n; ++m) {
    Nat bound = Nat{1} << (n - m);
    if (rep.count_at_least[m - 1] > bound) rep.violated = true;
  }
  return rep;
}

std::size_t test_value(TestKind kind, const BitString& x) {
  switch (kind) {
    case TestKind::LeadingZeros: {
      std::size_t i = 0;
      while (i < x.size() && x.at(i) == 0) ++i;
      return i;
    }
    case TestKind::OddPositionOnes: {
      std::size_t i = 0;
      while (2 * i < x.size() && x.at(2 * i) == 1) ++i;
      return i;
    }
  }
  return 0;
}

HostFeature::HostFeature(TestKind kind, std::size_t n, std::size_t m)
    : n_(n), m_(m) {
  if (m == 0) throw std::invalid_argument("need m >= 1");
  if (n > 20) throw std::invalid_argument("family sweep too wide");
  if (m <= n) {
    Nat total = Nat{1} << n;
    for (Nat v = 0; v < total; ++v) {
      BitString x = bits_of_value(v, n);
      if (test_value(kind, x) >= m) members_.push_back(std::move(x));
    }
  }
  validate();
}

HostFeature::HostFeature(std::vector<BitString> members, std::size_t n,
                         std::size_t m)
    : members_(std::move(members)), n_(n), m_(m) {
  if (m == 0) throw std::invalid_argument("need m >= 1");
  for (const BitString& x : members_)
    if (x.size() != n) throw std::invalid_argument("member of wrong length");
  std::sort(members_.begin(), members_.end());
  validate();
}

void HostFeature::validate() const {
  if (m_ > n_) {
    if (!members_.empty())
      throw NotATest("no index width is left above the string length");
    return;
  }
  Nat cap = Nat{1} << (n_ - m_);
  if (static_cast<Nat>(members_.size()) > cap)
    throw NotATest("family of " + std::to_string(members_.size()) +
                   " members cannot index into " + std::to_string(n_ - m_) +
                   " bits");
}

bool HostFeature::contains(const BitString& x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

BitString HostFeature::encode(const BitString& x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x)
    throw IndexOutOfRange("string is not in the family");
  Nat idx = static_cast<Nat>(it - members_.begin());
  return bits_of_value(idx, n_ - m_);
}

BitString HostFeature::decode(const BitString& residual) const {
  if (m_ > n_) throw IndexOutOfRange("family is empty");
  if (residual.size() != n_ - m_)
    throw IndexOutOfRange("residual must be exactly " +
                          std::to_string(n_ - m_) + " bits");
  Nat idx = bits_value(residual);
  if (idx >= static_cast<Nat>(members_.size()))
    throw IndexOutOfRange("index " + std::to_string(idx) +
                          " beyond family of " +
                          std::to_string(members_.size()));
  return members_[static_cast<std::size_t>(idx)];
}

}  // namespace alice
