#include "ialg/element.hpp"

#include <sstream>

#include "ialg/error.hpp"
#include "ialg/numeric.hpp"

namespace ialg {

std::string_view to_string(Flavor f) noexcept {
  return f == Flavor::interval ? "interval" : "plain";
}

ModInterval ModInterval::reduce(std::int64_t v, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1");
  return ModInterval{mod(v, n), n};
}

namespace {

std::string wrap(const std::string& inner, Flavor flavor) {
  return flavor == Flavor::interval ? "[0," + inner + "]" : inner;
}

std::string number_text(const NonnegNumber& x) {
  if (x.field == NumberField::reals) {
    std::ostringstream os;
    os << x.real;
    return os.str();
  }
  return to_string(Rational{x.num, x.den});
}

}  // namespace

std::string label(const Element& e, Flavor flavor) {
  struct Visitor {
    Flavor flavor;
    std::string operator()(const ModInterval& m) const {
      return wrap(std::to_string(m.value), flavor);
    }
    std::string operator()(const LoopPoint& p) const {
      return wrap(p.is_identity() ? std::string("e") : std::to_string(p.point), flavor);
    }
    std::string operator()(const NonnegNumber& x) const { return wrap(number_text(x), flavor); }
    std::string operator()(const MapElement& m) const {
      std::string out = "<";
      for (std::size_t i = 0; i < m.images.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(m.images[i]);
      }
      return out + ">";
    }
    std::string operator()(const MatrixElement& m) const {
      std::string out = "(";
      for (std::size_t r = 0; r < m.rows; ++r) {
        if (r) out += "; ";
        for (std::size_t c = 0; c < m.cols; ++c) {
          if (c) out += ' ';
          out += label(m.cells[r * m.cols + c], flavor);
        }
      }
      return out + ")";
    }
    std::string operator()(const TupleElement& t) const {
      std::string out = "(";
      for (std::size_t i = 0; i < t.parts.size(); ++i) {
        if (i) out += ", ";
        out += label(t.parts[i], flavor);
      }
      return out + ")";
    }
  };
  return std::visit(Visitor{flavor}, e.value);
}

}  // namespace ialg
