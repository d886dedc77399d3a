#pragma once

// Finite crystallographic root systems in simple-root coordinates.
//
// Conventions shared by every module:
//   * Simple roots are labelled 1..rank (Bourbaki numbering). All public
//     functions taking a "simple index" use these 1-based labels.
//   * cartan(i, j) = <alpha_j, alpha_i^vee>, so s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i.
//
// Bourbaki diagrams (long/short marked by the arrow pointing to the short root):
//
//   A_n   1 - 2 - ... - n
//   B_n   1 - 2 - ... - (n-1) => n
//   C_n   1 - 2 - ... - (n-1) <= n
//   D_n   1 - 2 - ... - (n-2) - (n-1)
//                          |
//                          n
//   E_6/E_7   1 - 3 - 4 - 5 - 6 [- 7]
//                     |
//                     2

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nash {

inline constexpr int kMaxRank = 12;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  // Throws nash::Error for F/G, ranks outside the supported range, etc.
  void validate() const;
  std::string name() const;  // "A3", "E7"
  static CartanType parse(const std::string& text);  // "A3", "d4", "E 6"
  auto operator<=>(const CartanType&) const = default;
};

// A root (or any lattice vector) in simple-root coordinates.
class Root {
 public:
  Root() = default;
  explicit Root(int rank) : rank_(static_cast<std::uint8_t>(rank)) {}
  Root(std::initializer_list<int> coords);

  static Root simple(int rank, int index);  // alpha_index, 1-based

  int rank() const { return rank_; }
  int operator[](int slot) const { return coords_[slot]; }
  void set(int slot, int value) { coords_[slot] = static_cast<std::int8_t>(value); }

  bool is_zero() const;
  bool is_positive() const;
  bool is_negative() const;
  int height() const;
  // Bit (i-1) set iff alpha_i occurs with nonzero coefficient.
  std::uint32_t support() const;

  Root operator-() const;
  Root& operator+=(const Root& other);
  Root& operator-=(const Root& other);
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  friend Root operator*(int k, Root a);

  // If *this = k * other for an integer k, returns k.
  std::optional<int> multiple_of(const Root& other) const;

  std::vector<int> coords() const;
  // "a1+a2", "-(a1+2a2)", "0"
  std::string to_string() const;

  auto operator<=>(const Root&) const = default;

 private:
  std::array<std::int8_t, kMaxRank> coords_{};
  std::uint8_t rank_ = 0;
};

class RootSystem {
 public:
  static RootSystem build(const CartanType& ct);

  const CartanType& cartan_type() const { return type_; }
  int rank() const { return type_.rank; }
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }  // 1-based
  int symmetrizer(int i) const { return sym_[i - 1]; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  // Positive roots followed by their negatives.
  const std::vector<Root>& roots() const { return all_; }
  std::optional<std::size_t> find(const Root& r) const;
  bool is_root(const Root& r) const { return find(r).has_value(); }

  // Symmetric form (beta, alpha) from D*A.
  int inner(const Root& beta, const Root& alpha) const;
  // <beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha).
  int pairing(const Root& beta, const Root& alpha) const;
  // <beta, alpha_i^vee>, the cheap special case used everywhere.
  int simple_pairing(const Root& beta, int i) const;
  // beta - <beta, alpha^vee> alpha; throws InvariantViolation if the result is not a root.
  Root reflect(const Root& alpha, const Root& beta) const;

  Root simple_root(int i) const { return Root::simple(rank(), i); }
  const Root& highest_root() const { return highest_; }
  std::vector<int> cominuscule_simples() const;

 private:
  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
  std::vector<Root> positive_;
  std::vector<Root> all_;
  std::map<Root, std::size_t> index_;
  Root highest_;
};

std::vector<std::vector<int>> cartan_matrix(const CartanType& ct);
std::size_t classical_positive_root_count(const CartanType& ct);

}  // namespace nash
