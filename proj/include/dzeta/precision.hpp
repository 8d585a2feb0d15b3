#ifndef DZETA_PRECISION_HPP
#define DZETA_PRECISION_HPP

#include "dzeta/real.hpp"

namespace dzeta {

/// Decimal working precision plus the guard digits carried internally.
/// Results are rounded back to `digits()` at public boundaries.
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 16;
  static constexpr int kMinGuardDigits = 10;
  static constexpr int kDefaultGuardDigits = 15;

  /// Throws DomainError unless digits >= 16 and guard_digits >= 10.
  explicit PrecisionContext(int digits = 50, int guard_digits = kDefaultGuardDigits);

  /// Zero searching: 50 digits.
  static PrecisionContext search() { return PrecisionContext(50); }
  /// Certification: 100 digits.
  static PrecisionContext certification() { return PrecisionContext(100); }

  int digits() const { return digits_; }
  int guard_digits() const { return guard_digits_; }
  int working_digits() const { return digits_ + guard_digits_; }

  Precision result_bits() const { return bits_for_digits(digits_); }
  Precision working_bits() const { return bits_for_digits(working_digits()); }

  PrecisionContext with_digits(int digits) const { return PrecisionContext(digits, guard_digits_); }
  /// Same guard, `extra` more digits.
  PrecisionContext raised(int extra) const { return with_digits(digits_ + extra); }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int digits_;
  int guard_digits_;
};

}  // namespace dzeta

#endif  // DZETA_PRECISION_HPP
