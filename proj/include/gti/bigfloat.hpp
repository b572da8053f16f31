#ifndef GTI_BIGFLOAT_HPP
#define GTI_BIGFLOAT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gti {

// Fixed-point decimal arithmetic: value = sign · mag · 10^(-9·fracLimbs),
// with mag stored little-endian in base 1e9. Supports the operations the
// near-equality scanner needs (add, sub, multiply, divide by machine int,
// square root) at a configurable number of significant digits. Operands of
// a binary operation must share the same precision.
class BigFloat {
 public:
  BigFloat() = default;

  // fracDigits of fractional precision (rounded up to a limb multiple).
  static BigFloat fromInt(long long value, int fracDigits);
  static BigFloat zero(int fracDigits) { return fromInt(0, fracDigits); }

  // 10^(-k), for thresholds like the candidate cutoff.
  static BigFloat pow10Negative(int k, int fracDigits);

  // √value for integer value >= 0.
  static BigFloat sqrtOfInt(long long value, int fracDigits);

  // √x for x >= 0 (Newton on the reciprocal root, multiplications only).
  static BigFloat sqrt(const BigFloat& x);

  BigFloat operator/(const BigFloat& o) const;  // o != 0

  BigFloat operator+(const BigFloat& o) const;
  BigFloat operator-(const BigFloat& o) const;
  BigFloat operator-() const;
  BigFloat operator*(const BigFloat& o) const;
  BigFloat mulInt(long long k) const;
  BigFloat divInt(long long k) const;  // k != 0, |k| < 2^31

  BigFloat abs() const;
  int sign() const { return sign_; }
  bool isZero() const { return sign_ == 0; }

  // three-way compare: -1, 0, +1
  int compare(const BigFloat& o) const;
  bool operator<(const BigFloat& o) const { return compare(o) < 0; }
  bool operator==(const BigFloat& o) const { return compare(o) == 0; }

  double toDouble() const;

  // Decimal rendering with at most maxFracDigits fractional digits
  // (truncated, trailing zeros trimmed).
  std::string toString(int maxFracDigits = 50) const;

  int fracLimbs() const { return fracLimbs_; }

 private:
  int sign_ = 0;
  int fracLimbs_ = 0;
  std::vector<uint32_t> mag_;  // little-endian, base 1e9

  void normalize();
  static int cmpMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> addMag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b);
  static std::vector<uint32_t> subMag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mulMag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b);
};

}  // namespace gti

#endif  // GTI_BIGFLOAT_HPP
