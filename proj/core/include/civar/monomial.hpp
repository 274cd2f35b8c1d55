#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace civar {

// Upper bound on the number of ring variables. Rings in this library are
// small (ambient ring plus at most one auxiliary variable).
inline constexpr std::size_t kMaxVars = 16;

// Exponent vector. Multiplication adds exponents; the total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);
  static Monomial variable(std::size_t index, int power = 1);

  int operator[](std::size_t i) const noexcept { return exp_[i]; }
  int degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  // Throws InternalError if an exponent would exceed 255.
  Monomial operator*(const Monomial& other) const;
  // Precondition: other divides *this.
  Monomial operator/(const Monomial& other) const noexcept;
  bool divides(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  // Only variables in [0, n) may be nonzero.
  bool supported_in(std::size_t first, std::size_t last) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.deg_ == b.deg_ && a.exp_ == b.exp_;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint16_t deg_ = 0;
};

// Monomial order: graded reverse lexicographic, or a block elimination order
// whose first block is compared (degrevlex) before the remaining variables.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, block_elimination };

  MonomialOrder() = default;
  static MonomialOrder degrevlex(std::size_t nvars) { return {Kind::degrevlex, nvars, 0}; }
  static MonomialOrder elimination(std::size_t nvars, std::size_t first_block) {
    return {Kind::block_elimination, nvars, first_block};
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t block() const noexcept { return block_; }

  // Returns -1, 0, 1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::size_t n, std::size_t b) : kind_(k), nvars_(n), block_(b) {}
  static int revlex(const Monomial& a, const Monomial& b, std::size_t first,
                    std::size_t last) noexcept;

  Kind kind_ = Kind::degrevlex;
  std::size_t nvars_ = 0;
  std::size_t block_ = 0;
};

// All monomials of the given degree in n variables, in descending degrevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace civar
