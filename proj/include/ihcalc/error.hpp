#ifndef IHCALC_ERROR_HPP
#define IHCALC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace ihcalc {

// All computation failures carry a short machine-readable kind
// ("NotPolynomial", "NotDivisible", ...) next to the human message.
class CalcError : public std::runtime_error {
public:
  CalcError(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

}  // namespace ihcalc

#endif
