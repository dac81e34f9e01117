#include "camina/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "camina/error.hpp"

namespace camina {

namespace {

// Exact division of a by monic b over Z; both lowest degree first.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw Error(ErrorCode::InternalError, "cyclotomic division degree underflow");
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const auto c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw Error(ErrorCode::InternalError, "cyclotomic division left a remainder");
  return q;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t e) {
  thread_local std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  if (auto it = cache.find(e); it != cache.end()) return it->second;
  if (e == 0) throw Error(ErrorCode::InternalError, "cyclotomic polynomial of order 0");
  std::vector<std::int64_t> poly(e + 1, 0);
  poly[0] = -1;
  poly[e] = 1;
  for (std::uint32_t d = 1; d < e; ++d)
    if (e % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  return cache.emplace(e, std::move(poly)).first->second;
}

CyclotomicValue::CyclotomicValue(std::uint32_t e) : e_(e), coeffs_(e, 0) {
  if (e == 0) throw Error(ErrorCode::InternalError, "root-of-unity order must be positive");
}

CyclotomicValue CyclotomicValue::integer(std::uint32_t e, std::int64_t value) {
  CyclotomicValue v(e);
  v.coeffs_[0] = value;
  v.reduce();
  return v;
}

CyclotomicValue CyclotomicValue::root(std::uint32_t e, std::int64_t k) {
  CyclotomicValue v(e);
  const auto m = static_cast<std::int64_t>(e);
  v.coeffs_[static_cast<std::size_t>(((k % m) + m) % m)] = 1;
  v.reduce();
  return v;
}

CyclotomicValue CyclotomicValue::from_coefficients(std::uint32_t e, std::span<const std::int64_t> coeffs) {
  CyclotomicValue v(e);
  for (std::size_t k = 0; k < coeffs.size(); ++k) v.coeffs_[k % e] += coeffs[k];
  v.reduce();
  return v;
}

// Reduce mod Phi_e, using only its nonzero terms.
void CyclotomicValue::reduce() {
  const auto& phi = cyclotomic_polynomial(e_);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::pair<std::size_t, std::int64_t>> lower_terms;
  for (std::size_t j = 0; j < deg; ++j)
    if (phi[j] != 0) lower_terms.emplace_back(j, phi[j]);
  for (std::size_t i = coeffs_.size(); i-- > deg;) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    coeffs_[i] = 0;
    for (const auto& [j, pj] : lower_terms) coeffs_[i - deg + j] -= c * pj;
  }
}

bool CyclotomicValue::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

bool CyclotomicValue::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue& o) const {
  if (o.e_ != e_) throw Error(ErrorCode::InternalError, "mixed cyclotomic orders");
  CyclotomicValue r = *this;
  for (std::size_t k = 0; k < e_; ++k) r.coeffs_[k] += o.coeffs_[k];
  return r;
}

CyclotomicValue CyclotomicValue::operator-(const CyclotomicValue& o) const { return *this + (-o); }

CyclotomicValue CyclotomicValue::operator-() const {
  CyclotomicValue r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicValue CyclotomicValue::operator*(const CyclotomicValue& o) const {
  if (o.e_ != e_) throw Error(ErrorCode::InternalError, "mixed cyclotomic orders");
  CyclotomicValue r(e_);
  for (std::size_t i = 0; i < e_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < e_; ++j)
      if (o.coeffs_[j] != 0) r.coeffs_[(i + j) % e_] += coeffs_[i] * o.coeffs_[j];
  }
  r.reduce();
  return r;
}

CyclotomicValue CyclotomicValue::operator*(std::int64_t k) const {
  CyclotomicValue r = *this;
  for (auto& c : r.coeffs_) c *= k;
  return r;
}

CyclotomicValue CyclotomicValue::conj() const {
  CyclotomicValue r(e_);
  for (std::size_t k = 0; k < e_; ++k) r.coeffs_[(e_ - k) % e_] += coeffs_[k];
  r.reduce();
  return r;
}

std::string CyclotomicValue::to_string() const {
  if (is_rational()) return std::to_string(coeffs_[0]);
  std::size_t last = coeffs_.size();
  while (last > 0 && coeffs_[last - 1] == 0) --last;
  std::ostringstream out;
  out << 'z' << e_ << '[';
  for (std::size_t k = 0; k < last; ++k) out << (k ? " " : "") << coeffs_[k];
  out << ']';
  return out.str();
}

}  // namespace camina
