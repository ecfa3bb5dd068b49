#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootlace {

/// An input that was required to lie in RZ does not.
class NotRealRooted : public std::invalid_argument {
 public:
  explicit NotRealRooted(std::string which)
      : std::invalid_argument("NotRealRooted(" + which + ")"), which_(std::move(which)) {}
  const std::string& which() const { return which_; }

 private:
  std::string which_;
};

/// An input that was required to be a PF polynomial (or sequence) is not.
class NotPF : public std::invalid_argument {
 public:
  explicit NotPF(std::string which)
      : std::invalid_argument("NotPF(" + which + ")"), which_(std::move(which)) {}
  const std::string& which() const { return which_; }

 private:
  std::string which_;
};

class ZeroPolynomial : public std::invalid_argument {
 public:
  explicit ZeroPolynomial(const std::string& which)
      : std::invalid_argument("ZeroPolynomial(" + which + ")") {}
};

/// One or more hypotheses of a transform failed and `force` was not set.
/// Names are drawn from {"leading-sign", "leadsto", "interlaces", "gate",
/// "nonnegative-output"}.
class HypothesisViolation : public std::runtime_error {
 public:
  explicit HypothesisViolation(std::vector<std::string> which)
      : std::runtime_error(describe(which)), which_(std::move(which)) {}
  const std::vector<std::string>& which() const { return which_; }

 private:
  static std::string describe(const std::vector<std::string>& which) {
    std::string s = "HypothesisViolation{";
    for (std::size_t i = 0; i < which.size(); ++i) s += (i ? ", " : "") + which[i];
    return s + "}";
  }
  std::vector<std::string> which_;
};

/// ad >= bc fails.
class GateViolation : public HypothesisViolation {
 public:
  GateViolation() : HypothesisViolation({"gate"}) {}
};

class NegativeOutput : public std::runtime_error {
 public:
  explicit NegativeOutput(std::size_t k)
      : std::runtime_error("NegativeOutput{k=" + std::to_string(k) + "}"), k_(k) {}
  std::size_t k() const { return k_; }

 private:
  std::size_t k_;
};

class CoefficientSignViolation : public std::invalid_argument {
 public:
  explicit CoefficientSignViolation(std::size_t n)
      : std::invalid_argument("CoefficientSignViolation{n=" + std::to_string(n) + "}"), n_(n) {}
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
};

class NegativeEntry : public std::runtime_error {
 public:
  NegativeEntry(std::size_t n, std::size_t k)
      : std::runtime_error("NegativeEntry{n=" + std::to_string(n) + ", k=" + std::to_string(k) + "}"),
        n_(n), k_(k) {}
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }

 private:
  std::size_t n_;
  std::size_t k_;
};

/// A guaranteed property failed: the hypotheses held but the certified
/// outcome contradicts the theorem. Always a bug.
class InternalContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rootlace
