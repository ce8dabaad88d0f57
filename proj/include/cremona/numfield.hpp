#pragma once

// Exact arithmetic in Q[a]/(m) for a monic irreducible m, plus certified
// complex embeddings.  The realization engines work with the abstract field
// (residue polynomials in the generator a); embeddings only decorate output
// with approximate values, so exactness never depends on root refinement.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

using Float50 = boost::multiprecision::cpp_bin_float_50;
using CComplex50 = boost::multiprecision::cpp_complex_50;

class NumberField {
public:
  // m must be monic of degree >= 1 and irreducible over Q; irreducibility is
  // the caller's responsibility (the Salem-factor extraction guarantees it).
  static std::shared_ptr<const NumberField> make(IntPoly m) {
    if (m.is_zero() || !m.is_monic() || m.degree() < 1)
      throw std::invalid_argument("NumberField: modulus must be monic of positive degree");
    return std::shared_ptr<const NumberField>(new NumberField(std::move(m)));
  }

  const IntPoly& min_poly() const { return mp_; }
  const RatPoly& min_poly_q() const { return mpq_; }
  int degree() const { return mp_.degree(); }

  // Roots in canonical order: descending modulus, ties broken toward real
  // roots, then by descending real and imaginary part.  For a Salem-type
  // modulus the index-0 root is the real root lambda_1 > 1.
  const std::vector<CComplex50>& roots() const { return roots_; }

  bool operator==(const NumberField& o) const { return mp_ == o.mp_; }

private:
  explicit NumberField(IntPoly m) : mp_(std::move(m)), mpq_(mp_) { compute_roots(); }

  void compute_roots() {
    const int n = mp_.degree();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -mp_.c[i].get_d();
    const auto eig = comp.eigenvalues();
    const IntPoly d = mp_.derivative();
    for (int i = 0; i < n; ++i) {
      CComplex50 z(eig[i].real(), eig[i].imag());
      for (int it = 0; it < 200; ++it) {
        const CComplex50 num = mp_.eval(z), den = d.eval(z);
        if (abs(den) == 0) break;
        const CComplex50 step = num / den;
        z -= step;
        if (abs(step) < 1e-46 * (1 + abs(z))) break;
      }
      if (abs(z.imag()) < 1e-40) z = CComplex50(z.real(), 0);
      roots_.push_back(z);
    }
    std::sort(roots_.begin(), roots_.end(), [](const CComplex50& u, const CComplex50& v) {
      const auto au = abs(u), av = abs(v);
      if (au != av) return au > av;
      const bool ru = u.imag() == 0, rv = v.imag() == 0;
      if (ru != rv) return ru;
      if (u.real() != v.real()) return u.real() > v.real();
      return u.imag() > v.imag();
    });
  }

  IntPoly mp_;
  RatPoly mpq_;
  std::vector<CComplex50> roots_;
};

using Field = std::shared_ptr<const NumberField>;

class NFElem {
public:
  NFElem() = default;
  NFElem(Field f, Rat r) : f_(std::move(f)) {
    if (r != 0) rep_.c.assign(1, std::move(r));
  }
  NFElem(Field f, RatPoly rep) : f_(std::move(f)), rep_(std::move(rep)) { reduce(); }

  static NFElem gen(const Field& f) {
    return NFElem(f, RatPoly(std::vector<Rat>{Rat(0), Rat(1)}));
  }

  const Field& field() const { return f_; }
  const RatPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rat rational_part() const { return rep_.coeff(0); }

  friend NFElem operator+(const NFElem& a, const NFElem& b) {
    return NFElem(a.common(b), a.rep_ + b.rep_);
  }
  friend NFElem operator-(const NFElem& a, const NFElem& b) {
    return NFElem(a.common(b), a.rep_ - b.rep_);
  }
  friend NFElem operator*(const NFElem& a, const NFElem& b) {
    return NFElem(a.common(b), a.rep_ * b.rep_);
  }
  NFElem operator-() const {
    RatPoly r = rep_;
    for (Rat& c : r.c) c = -c;
    return NFElem(f_, std::move(r));
  }

  NFElem inverse() const {
    if (is_zero()) throw std::domain_error("NFElem: inverse of zero");
    require_field();
    auto [g, u, v] = xgcd(rep_, f_->min_poly_q());
    if (g.degree() != 0)
      throw std::logic_error("NFElem: modulus not coprime to residue (not irreducible?)");
    // g is normalized monic = 1, so u * rep = 1 mod m.
    return NFElem(f_, std::move(u));
  }

  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

  NFElem pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NFElem acc(f_, Rat(1)), base = *this;
    for (long k = e; k > 0; k >>= 1) {
      if (k & 1) acc = acc * base;
      base = base * base;
    }
    return acc;
  }

  bool operator==(const NFElem& o) const {
    if (f_ && o.f_ && !(*f_ == *o.f_))
      throw std::invalid_argument("NFElem: comparing elements of different fields");
    return rep_ == o.rep_;
  }

  CComplex50 embed(int root_index = 0) const {
    require_field();
    const auto& roots = f_->roots();
    if (root_index < 0 || root_index >= static_cast<int>(roots.size()))
      throw std::out_of_range("NFElem: root index out of range");
    const CComplex50& a = roots[root_index];
    CComplex50 acc(0);
    for (auto it = rep_.c.rbegin(); it != rep_.c.rend(); ++it)
      acc = acc * a + CComplex50(Float50(it->get_num().get_str()) /
                                 Float50(it->get_den().get_str()));
    return acc;
  }

  std::string str() const {
    if (rep_.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= rep_.degree(); ++i) {
      const Rat& c = rep_.c[i];
      if (c == 0) continue;
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      const Rat a = abs(c);
      if (a != 1 || i == 0) os << a.get_str();
      if (i >= 1) os << "a";
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os.str();
  }

private:
  void reduce() {
    require_field();
    if (rep_.degree() >= f_->degree())
      rep_ = RatPoly::divrem(rep_, f_->min_poly_q()).second;
  }
  void require_field() const {
    if (!f_) throw std::logic_error("NFElem: missing field");
  }
  Field common(const NFElem& o) const {
    if (f_ && o.f_ && !(*f_ == *o.f_))
      throw std::invalid_argument("NFElem: mixing elements of different fields");
    return f_ ? f_ : o.f_;
  }

  Field f_;
  RatPoly rep_;
};

}  // namespace cremona
