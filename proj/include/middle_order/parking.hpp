#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "middle_order/permutation.hpp"
#include "middle_order/poset.hpp"

namespace middle_order {

/// A parking function (1-based preferences) or the adjoined top element.
class ParkingFunction {
public:
  /// Throws std::invalid_argument unless `prefs` is a parking function.
  explicit ParkingFunction(std::vector<int> prefs);

  static ParkingFunction top() { return ParkingFunction(); }

  bool is_top() const noexcept { return top_; }
  /// Empty for the top element.
  std::span<const int> prefs() const noexcept { return prefs_; }

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;

private:
  ParkingFunction() : top_(true) {}

  std::vector<int> prefs_;
  bool top_ = false;
};

/// Sorted criterion: the nondecreasing rearrangement q satisfies q_i <= i.
/// Throws std::invalid_argument if an entry lies outside [1, n].
bool is_parking_function(std::span<const int> prefs);

/// Car-by-car simulation: each car takes the first free spot at or after its preference.
/// Throws std::invalid_argument if an entry lies outside [1, n].
bool parks_all(std::span<const int> prefs);

/// Coordinate-wise order with the top above everything.
bool pf_leq(const ParkingFunction& p, const ParkingFunction& q);

/// Coordinate-wise minimum; the top is the identity. Throws SizeMismatch.
ParkingFunction pf_meet(const ParkingFunction& p, const ParkingFunction& q);

/// Coordinate-wise maximum when that is a parking function, the top otherwise. Throws SizeMismatch.
ParkingFunction pf_join(const ParkingFunction& p, const ParkingFunction& q);

/// {bottom, a, b, c, top} forming a pentagon sublattice with b < c and a incomparable to both.
/// For n = 3 these are 111, 311, 113, 123 and the top; larger n appends the coordinates
/// 4, 5, ..., n to each of the four parking functions. Throws std::invalid_argument for n < 3.
std::array<ParkingFunction, 5> pentagon_witness(int n);

/// Parking functions of size n in lexicographic order.
std::vector<ParkingFunction> all_parking_functions(int n, int limit = kDefaultExhaustiveLimit);

/// All parking functions of size n plus the top (listed last), ordered coordinate-wise.
FinitePoset parking_poset(int n, int limit = kDefaultExhaustiveLimit);

/// "1,1,3" for preferences, "T" for the top.
std::string to_string(const ParkingFunction& p);
ParkingFunction parse_parking_function(std::string_view text);

}  // namespace middle_order
