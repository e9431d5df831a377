#include "semimod/semiring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace semimod {

namespace {

std::string fmt_vec(const NatVec& v, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (v[i] != 1) s += std::to_string(v[i]) + "*";
    s += names[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

BasedSemiring::BasedSemiring(std::vector<std::string> basis_names, NatVec unit,
                             std::vector<std::vector<NatVec>> mult)
    : basis_names_(std::move(basis_names)), unit_(std::move(unit)), mult_(std::move(mult)) {
  const std::size_t k = basis_names_.size();
  if (k == 0) throw MalformedError("based semiring needs a non-empty basis");
  std::set<std::string> seen(basis_names_.begin(), basis_names_.end());
  if (seen.size() != k) throw MalformedError("basis labels must be distinct");
  if (unit_.size() != k) throw MalformedError("unit vector length differs from basis size");
  if (mult_.size() != k) throw MalformedError("mult table must have one row per basis element");
  for (std::size_t i = 0; i < k; ++i) {
    if (mult_[i].size() != k) throw MalformedError("mult table row " + std::to_string(i) + " malformed");
    for (std::size_t j = 0; j < k; ++j)
      if (mult_[i][j].size() != k)
        throw MalformedError("structure constants at (" + std::to_string(i) + "," +
                             std::to_string(j) + ") have wrong length");
  }
}

int BasedSemiring::basis_index(std::string_view name) const {
  for (std::size_t i = 0; i < basis_names_.size(); ++i)
    if (basis_names_[i] == name) return static_cast<int>(i);
  return -1;
}

NatVec BasedSemiring::mul(const NatVec& a, const NatVec& b) const {
  const std::size_t k = basis_size();
  if (a.size() != k || b.size() != k) throw MalformedError("operand length differs from basis size");
  NatVec r = NatVec::zeros(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] == 0) continue;
      const Nat c = checked_mul(a[i], b[j]);
      const NatVec& sc = mult_[i][j];
      for (std::size_t h = 0; h < k; ++h)
        if (sc[h] != 0) r[h] = checked_add(r[h], checked_mul(c, sc[h]));
    }
  }
  return r;
}

std::vector<std::string> BasedSemiring::validate() const {
  std::vector<std::string> report;
  const std::size_t k = basis_size();
  for (std::size_t i = 0; i < k; ++i) {
    NatVec ei = NatVec::basis(k, i);
    if (mul(unit_, ei) != ei)
      report.push_back("unit fails on the left of " + basis_names_[i]);
    if (mul(ei, unit_) != ei)
      report.push_back("unit fails on the right of " + basis_names_[i]);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t h = 0; h < k; ++h) {
        NatVec lhs = mul(mult_[i][j], NatVec::basis(k, h));
        NatVec rhs = mul(NatVec::basis(k, i), mult_[j][h]);
        if (lhs != rhs)
          report.push_back("associativity fails on (" + basis_names_[i] + "," + basis_names_[j] +
                           "," + basis_names_[h] + "): " + fmt_vec(lhs, basis_names_) +
                           " != " + fmt_vec(rhs, basis_names_));
      }
  return report;
}

FiniteSemiring::FiniteSemiring(std::vector<std::string> element_names,
                               std::vector<std::vector<std::uint32_t>> add,
                               std::vector<std::vector<std::uint32_t>> mul, std::uint32_t zero,
                               std::uint32_t one)
    : element_names_(std::move(element_names)),
      add_(std::move(add)),
      mul_(std::move(mul)),
      zero_(zero),
      one_(one) {
  const std::size_t n = element_names_.size();
  if (n == 0) throw MalformedError("finite semiring needs at least one element");
  std::set<std::string> seen(element_names_.begin(), element_names_.end());
  if (seen.size() != n) throw MalformedError("element labels must be distinct");
  if (zero_ >= n || one_ >= n) throw MalformedError("zero/one index out of range");
  for (auto* tbl : {&add_, &mul_}) {
    if (tbl->size() != n) throw MalformedError("table must be square of the element count");
    for (const auto& row : *tbl) {
      if (row.size() != n) throw MalformedError("table row has wrong length");
      for (auto v : row)
        if (v >= n) throw MalformedError("table entry out of range");
    }
  }
}

int FiniteSemiring::element_index(std::string_view name) const {
  for (std::size_t i = 0; i < element_names_.size(); ++i)
    if (element_names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> FiniteSemiring::validate() const {
  std::vector<std::string> report;
  const std::size_t n = size();
  auto name = [&](std::uint32_t i) { return element_names_[i]; };
  for (std::uint32_t a = 0; a < n; ++a) {
    if (add_[a][zero_] != a || add_[zero_][a] != a)
      report.push_back("zero is not an additive identity at " + name(a));
    if (mul_[a][one_] != a || mul_[one_][a] != a)
      report.push_back("one is not a multiplicative identity at " + name(a));
    if (mul_[a][zero_] != zero_ || mul_[zero_][a] != zero_)
      report.push_back("zero does not absorb at " + name(a));
    for (std::uint32_t b = 0; b < n; ++b) {
      if (add_[a][b] != add_[b][a])
        report.push_back("addition not commutative at (" + name(a) + "," + name(b) + ")");
      for (std::uint32_t c = 0; c < n; ++c) {
        if (add_[add_[a][b]][c] != add_[a][add_[b][c]])
          report.push_back("addition not associative at (" + name(a) + "," + name(b) + "," +
                           name(c) + ")");
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          report.push_back("multiplication not associative at (" + name(a) + "," + name(b) + "," +
                           name(c) + ")");
        if (mul_[add_[a][b]][c] != add_[mul_[a][c]][mul_[b][c]])
          report.push_back("right distributivity fails at (" + name(a) + "," + name(b) + "," +
                           name(c) + ")");
        if (mul_[c][add_[a][b]] != add_[mul_[c][a]][mul_[c][b]])
          report.push_back("left distributivity fails at (" + name(a) + "," + name(b) + "," +
                           name(c) + ")");
      }
    }
  }
  return report;
}

const BasedSemiring& Semiring::based() const {
  if (!is_based()) throw MalformedError("operation requires a based semiring");
  return std::get<BasedSemiring>(value);
}

const FiniteSemiring& Semiring::finite() const {
  if (is_based()) throw MalformedError("operation requires a finite semiring");
  return std::get<FiniteSemiring>(value);
}

std::size_t Semiring::generator_count() const {
  return is_based() ? based().basis_size() : finite().size();
}

const std::string& Semiring::generator_name(std::size_t i) const {
  return is_based() ? based().basis_name(i) : finite().element_name(i);
}

std::vector<std::string> Semiring::validate() const {
  return is_based() ? based().validate() : finite().validate();
}

SemiringPtr make_semiring(BasedSemiring b) { return std::make_shared<Semiring>(std::move(b)); }
SemiringPtr make_semiring(FiniteSemiring f) { return std::make_shared<Semiring>(std::move(f)); }

bool finite_semirings_isomorphic(const FiniteSemiring& a, const FiniteSemiring& b) {
  if (a.size() != b.size()) return false;
  if ((a.zero() == a.one()) != (b.zero() == b.one())) return false;
  const std::size_t n = a.size();
  if (n > 8) throw BoundError("finite semiring isomorphism is bounded at 8 elements");
  std::vector<std::uint32_t> others;
  for (std::uint32_t i = 0; i < n; ++i)
    if (i != a.zero() && i != a.one()) others.push_back(i);
  std::vector<std::uint32_t> images;
  for (std::uint32_t i = 0; i < n; ++i)
    if (i != b.zero() && i != b.one()) images.push_back(i);
  if (others.size() != images.size()) return false;

  std::sort(images.begin(), images.end());
  do {
    std::vector<std::uint32_t> phi(n);
    phi[a.zero()] = b.zero();
    phi[a.one()] = b.one();
    for (std::size_t i = 0; i < others.size(); ++i) phi[others[i]] = images[i];
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      for (std::uint32_t y = 0; y < n && ok; ++y)
        ok = phi[a.add(x, y)] == b.add(phi[x], phi[y]) && phi[a.mul(x, y)] == b.mul(phi[x], phi[y]);
    if (ok) return true;
  } while (std::next_permutation(images.begin(), images.end()));
  return false;
}

}  // namespace semimod
