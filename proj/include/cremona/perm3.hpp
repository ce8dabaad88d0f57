#pragma once

// Permutations of {0,1,2}.  Orbit data and component bookkeeping never need
// anything bigger, so the whole symmetric group lives in a lookup-friendly
// value type.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cremona {

class Perm3 {
public:
  constexpr Perm3() : img_{0, 1, 2} {}
  constexpr Perm3(int a, int b, int c) : img_{static_cast<std::uint8_t>(a),
                                              static_cast<std::uint8_t>(b),
                                              static_cast<std::uint8_t>(c)} {
    if (((1 << a) | (1 << b) | (1 << c)) != 0b111)
      throw std::invalid_argument("Perm3: images are not a permutation of {0,1,2}");
  }

  static constexpr Perm3 identity() { return Perm3{}; }

  // Transposition swapping i and j (0-based).
  static constexpr Perm3 swap(int i, int j) {
    Perm3 p;
    p.img_[i] = static_cast<std::uint8_t>(j);
    p.img_[j] = static_cast<std::uint8_t>(i);
    return p;
  }

  constexpr int operator()(int i) const { return img_[i]; }

  constexpr bool operator==(const Perm3&) const = default;

  constexpr Perm3 inverse() const {
    Perm3 p;
    p.img_[img_[0]] = 0;
    p.img_[img_[1]] = 1;
    p.img_[img_[2]] = 2;
    return p;
  }

  // Composition acts as functions: (p * q)(i) = p(q(i)).
  constexpr Perm3 operator*(const Perm3& q) const {
    Perm3 r;
    for (int i = 0; i < 3; ++i) r.img_[i] = img_[q.img_[i]];
    return r;
  }

  constexpr bool is_identity() const { return *this == Perm3{}; }

  constexpr int order() const {
    if (is_identity()) return 1;
    return (*this * *this).is_identity() ? 2 : 3;
  }

  constexpr int sign() const { return order() == 2 ? -1 : 1; }

  constexpr Perm3 pow(long e) const {
    const int o = order();
    e %= o;
    if (e < 0) e += o;
    Perm3 r;
    for (; e > 0; --e) r = *this * r;
    return r;
  }

  static constexpr std::array<Perm3, 6> all() {
    return {Perm3{0, 1, 2}, Perm3{1, 0, 2}, Perm3{2, 1, 0},
            Perm3{0, 2, 1}, Perm3{1, 2, 0}, Perm3{2, 0, 1}};
  }

  // Cycle notation on 1-based letters: "id", "(12)", "(13)", "(23)",
  // "(123)" meaning 1->2->3->1, "(132)" meaning 1->3->2->1.
  std::string str() const {
    if (is_identity()) return "id";
    if (*this == swap(0, 1)) return "(12)";
    if (*this == swap(0, 2)) return "(13)";
    if (*this == swap(1, 2)) return "(23)";
    if (*this == Perm3{1, 2, 0}) return "(123)";
    return "(132)";
  }

  static Perm3 parse(const std::string& s) {
    for (const Perm3& p : all())
      if (p.str() == s) return p;
    throw std::invalid_argument("Perm3: cannot parse '" + s +
                                "' (expected id, (12), (13), (23), (123), (132))");
  }

private:
  std::array<std::uint8_t, 3> img_;
};

}  // namespace cremona
