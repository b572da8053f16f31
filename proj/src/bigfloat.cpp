#include "gti/bigfloat.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gti {

namespace {
constexpr uint64_t kBase = 1000000000ULL;
constexpr int kGuardLimbs = 2;  // 18 guard digits beyond the requested precision

int limbsFor(int fracDigits) {
  if (fracDigits < 1) throw std::invalid_argument("BigFloat: fracDigits >= 1 required");
  return (fracDigits + 8) / 9 + kGuardLimbs;
}
}  // namespace

void BigFloat::normalize() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigFloat::cmpMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigFloat::addMag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(std::max(a.size(), b.size()) + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < out.size(); i++) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out[i] = static_cast<uint32_t>(s % kBase);
    carry = s / kBase;
  }
  return out;
}

std::vector<uint32_t> BigFloat::subMag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
  // requires a >= b
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); i++) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<uint32_t>(s);
  }
  return out;
}

std::vector<uint32_t> BigFloat::mulMag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); i++) {
    unsigned __int128 carry = 0;
    for (size_t j = 0; j < b.size() || carry; j++) {
      unsigned __int128 cur = carry + out[i + j];
      if (j < b.size()) cur += static_cast<uint64_t>(a[i]) * b[j];
      out[i + j] = static_cast<uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
  }
  return out;
}

BigFloat BigFloat::fromInt(long long value, int fracDigits) {
  BigFloat r;
  r.fracLimbs_ = limbsFor(fracDigits);
  r.sign_ = (value > 0) - (value < 0);
  unsigned long long v = value < 0 ? -static_cast<unsigned long long>(value) : value;
  r.mag_.assign(r.fracLimbs_, 0);
  while (v) {
    r.mag_.push_back(static_cast<uint32_t>(v % kBase));
    v /= kBase;
  }
  r.normalize();
  return r;
}

BigFloat BigFloat::pow10Negative(int k, int fracDigits) {
  BigFloat r;
  r.fracLimbs_ = limbsFor(fracDigits);
  int pos = 9 * r.fracLimbs_ - k;
  if (pos < 0) return zero(fracDigits);
  r.sign_ = 1;
  r.mag_.assign(pos / 9 + 1, 0);
  uint32_t digit = 1;
  for (int i = 0; i < pos % 9; i++) digit *= 10;
  r.mag_[pos / 9] = digit;
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
  assert(fracLimbs_ == o.fracLimbs_ && "BigFloat: mixed precision");
  if (sign_ == 0) return o;
  if (o.sign_ == 0) return *this;
  BigFloat r;
  r.fracLimbs_ = fracLimbs_;
  if (sign_ == o.sign_) {
    r.sign_ = sign_;
    r.mag_ = addMag(mag_, o.mag_);
  } else {
    int c = cmpMag(mag_, o.mag_);
    if (c == 0) {
      BigFloat z;
      z.fracLimbs_ = fracLimbs_;
      return z;
    }
    if (c > 0) {
      r.sign_ = sign_;
      r.mag_ = subMag(mag_, o.mag_);
    } else {
      r.sign_ = o.sign_;
      r.mag_ = subMag(o.mag_, mag_);
    }
  }
  r.normalize();
  return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const { return *this + (-o); }

BigFloat BigFloat::operator*(const BigFloat& o) const {
  assert(fracLimbs_ == o.fracLimbs_ && "BigFloat: mixed precision");
  BigFloat r;
  r.fracLimbs_ = fracLimbs_;
  r.sign_ = sign_ * o.sign_;
  if (r.sign_ == 0) return r;
  std::vector<uint32_t> full = mulMag(mag_, o.mag_);
  // drop the lowest fracLimbs limbs: truncation toward zero
  if (static_cast<int>(full.size()) <= fracLimbs_) {
    r.sign_ = 0;
    return r;
  }
  r.mag_.assign(full.begin() + fracLimbs_, full.end());
  r.normalize();
  return r;
}

BigFloat BigFloat::mulInt(long long k) const {
  if (k == 0 || sign_ == 0) {
    BigFloat z;
    z.fracLimbs_ = fracLimbs_;
    return z;
  }
  if (k < -(1LL << 31) || k >= (1LL << 31))
    throw std::invalid_argument("BigFloat::mulInt: |k| must fit in 31 bits");
  BigFloat r;
  r.fracLimbs_ = fracLimbs_;
  r.sign_ = (k > 0) ? sign_ : -sign_;
  uint64_t ku = static_cast<uint64_t>(k > 0 ? k : -k);
  uint64_t carry = 0;
  r.mag_.reserve(mag_.size() + 2);
  for (uint32_t limb : mag_) {
    uint64_t cur = static_cast<uint64_t>(limb) * ku + carry;
    r.mag_.push_back(static_cast<uint32_t>(cur % kBase));
    carry = cur / kBase;
  }
  while (carry) {
    r.mag_.push_back(static_cast<uint32_t>(carry % kBase));
    carry /= kBase;
  }
  r.normalize();
  return r;
}

BigFloat BigFloat::divInt(long long k) const {
  if (k == 0) throw std::invalid_argument("BigFloat::divInt: division by zero");
  if (k < -(1LL << 31) || k >= (1LL << 31))
    throw std::invalid_argument("BigFloat::divInt: |k| must fit in 31 bits");
  BigFloat r;
  r.fracLimbs_ = fracLimbs_;
  if (sign_ == 0) return r;
  r.sign_ = (k > 0) ? sign_ : -sign_;
  uint64_t ku = static_cast<uint64_t>(k > 0 ? k : -k);
  r.mag_.assign(mag_.size(), 0);
  uint64_t rem = 0;
  for (size_t i = mag_.size(); i-- > 0;) {
    uint64_t cur = rem * kBase + mag_[i];
    r.mag_[i] = static_cast<uint32_t>(cur / ku);
    rem = cur % ku;
  }
  r.normalize();
  return r;
}

int BigFloat::compare(const BigFloat& o) const {
  assert(fracLimbs_ == o.fracLimbs_ && "BigFloat: mixed precision");
  if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
  if (sign_ == 0) return 0;
  return sign_ * cmpMag(mag_, o.mag_);
}

double BigFloat::toDouble() const {
  if (sign_ == 0) return 0.0;
  long double acc = 0.0L;
  for (size_t i = mag_.size(); i-- > 0;) acc = acc * static_cast<long double>(kBase) + mag_[i];
  acc *= powl(static_cast<long double>(kBase), -static_cast<long double>(fracLimbs_));
  return static_cast<double>(sign_ * acc);
}

std::string BigFloat::toString(int maxFracDigits) const {
  if (sign_ == 0) return "0";
  std::string out = sign_ < 0 ? "-" : "";
  // integer part
  std::string ip;
  for (size_t i = mag_.size(); i-- > static_cast<size_t>(fracLimbs_);) {
    char buf[16];
    std::snprintf(buf, sizeof buf, ip.empty() ? "%u" : "%09u", mag_[i]);
    ip += buf;
  }
  if (static_cast<int>(mag_.size()) <= fracLimbs_ || ip.empty()) ip = "0";
  out += ip;
  // fractional part
  std::string fp;
  for (int i = fracLimbs_ - 1; i >= 0; i--) {
    char buf[16];
    uint32_t limb = (static_cast<size_t>(i) < mag_.size()) ? mag_[i] : 0;
    std::snprintf(buf, sizeof buf, "%09u", limb);
    fp += buf;
  }
  if (static_cast<int>(fp.size()) > maxFracDigits) fp.resize(maxFracDigits);
  while (!fp.empty() && fp.back() == '0') fp.pop_back();
  if (!fp.empty()) out += "." + fp;
  return out;
}

namespace {

BigFloat fromLongDouble(long double v, const BigFloat& models) {
  // builds a value with the same precision as `models`; seed use only
  int digits = 9 * (models.fracLimbs() - kGuardLimbs);
  long double a = fabsl(v);
  if (!(a < 9e18)) throw std::invalid_argument("BigFloat: seed magnitude out of range");
  long long ip = static_cast<long long>(a);
  BigFloat out = BigFloat::fromInt(ip, digits);
  a -= ip;
  // add fractional digits limb by limb
  BigFloat scale = BigFloat::fromInt(1, digits);
  for (int i = 0; i < models.fracLimbs(); i++) {
    a *= static_cast<long double>(kBase);
    long long limb = static_cast<long long>(a);
    a -= limb;
    scale = scale.divInt(static_cast<long long>(kBase));
    if (limb) out = out + scale.mulInt(limb);
    if (scale.isZero()) break;
  }
  return v < 0 ? -out : out;
}

}  // namespace

BigFloat BigFloat::sqrtOfInt(long long value, int fracDigits) {
  if (value < 0) throw std::invalid_argument("sqrtOfInt: negative argument");
  return sqrt(fromInt(value, fracDigits));
}

BigFloat BigFloat::sqrt(const BigFloat& x) {
  if (x.sign_ < 0) throw std::invalid_argument("sqrt: negative argument");
  if (x.sign_ == 0) return x;
  int digits = 9 * (x.fracLimbs_ - kGuardLimbs);
  // Newton iteration for 1/√x using multiplications only:
  // r <- r(3 - x r²)/2, seeded from long double.
  BigFloat r = fromLongDouble(1.0L / sqrtl(static_cast<long double>(x.toDouble())), x);
  BigFloat three = fromInt(3, digits);
  for (int it = 0; it < 5; it++) r = (r * (three - x * r * r)).divInt(2);
  return x * r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
  if (o.sign_ == 0) throw std::invalid_argument("BigFloat: division by zero");
  assert(fracLimbs_ == o.fracLimbs_ && "BigFloat: mixed precision");
  int digits = 9 * (fracLimbs_ - kGuardLimbs);
  // reciprocal by Newton: r <- r(2 - |o| r), then fix the sign
  BigFloat b = o.abs();
  BigFloat r = fromLongDouble(1.0L / static_cast<long double>(b.toDouble()), b);
  BigFloat two = fromInt(2, digits);
  for (int it = 0; it < 5; it++) r = r * (two - b * r);
  BigFloat q = *this * r;
  if (o.sign_ < 0) q.sign_ = -q.sign_;
  return q;
}

}  // namespace gti
