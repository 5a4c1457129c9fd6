#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ialg {

/// Interval components print as "[0, a]"; plain ones as "a". The algebra is
/// the same either way.
enum class Flavor { interval, plain };

std::string_view to_string(Flavor f) noexcept;

enum class NumberField { integers, rationals, reals };

/// The interval [0, a] with a a residue modulo n.
struct ModInterval {
  std::int64_t value = 0;
  std::int64_t modulus = 1;

  /// Reduces any integer into [0, n).
  static ModInterval reduce(std::int64_t v, std::int64_t n);
  friend bool operator==(const ModInterval&, const ModInterval&) = default;
};

/// A point of {e, 1, ..., n}; point 0 encodes the identity e.
struct LoopPoint {
  std::uint32_t point = 0;
  std::uint32_t ambient = 0;

  bool is_identity() const noexcept { return point == 0; }
  friend bool operator==(const LoopPoint&, const LoopPoint&) = default;
};

/// A value of Z+ ∪ {0}, Q+ ∪ {0} or R+ ∪ {0}. Integers and rationals are kept
/// exactly as num/den; reals use `real`.
struct NonnegNumber {
  NumberField field = NumberField::integers;
  std::int64_t num = 0;
  std::int64_t den = 1;
  double real = 0.0;

  friend bool operator==(const NonnegNumber&, const NonnegNumber&) = default;
};

struct Element;

/// A map on {1..k}, stored as its image list (targets are 1-based).
struct MapElement {
  std::vector<std::uint8_t> images;
  friend bool operator==(const MapElement&, const MapElement&) = default;
};

struct MatrixElement {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Element> cells;  // row-major
  friend bool operator==(const MatrixElement&, const MatrixElement&) = default;
};

struct TupleElement {
  std::vector<Element> parts;
  friend bool operator==(const TupleElement&, const TupleElement&) = default;
};

struct Element {
  std::variant<ModInterval, LoopPoint, NonnegNumber, MapElement, MatrixElement, TupleElement>
      value;

  static Element mod(std::int64_t v, std::int64_t n) { return {ModInterval::reduce(v, n)}; }
  static Element loop(std::uint32_t point, std::uint32_t n) { return {LoopPoint{point, n}}; }
  static Element loop_identity(std::uint32_t n) { return {LoopPoint{0, n}}; }
  static Element integer(std::int64_t v) { return {NonnegNumber{NumberField::integers, v, 1, 0.0}}; }
  static Element map(std::vector<std::uint8_t> images) { return {MapElement{std::move(images)}}; }
  static Element tuple(std::vector<Element> parts) { return {TupleElement{std::move(parts)}}; }
  static Element matrix(std::size_t rows, std::size_t cols, std::vector<Element> cells) {
    return {MatrixElement{rows, cols, std::move(cells)}};
  }

  template <class T>
  bool is() const noexcept { return std::holds_alternative<T>(value); }
  template <class T>
  const T& as() const { return std::get<T>(value); }

  friend bool operator==(const Element&, const Element&) = default;
};

/// Display label. Interval flavor: "[0,a]" or "[0,e]"; plain: "a" or "e".
/// Tuples print as "(c1, c2, ...)", matrices as "(r1c1 r1c2; r2c1 r2c2)" and
/// maps by their images "<3 1 2>".
std::string label(const Element& e, Flavor flavor = Flavor::interval);

}  // namespace ialg
