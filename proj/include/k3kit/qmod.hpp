// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Values in Q/Z and Q/2Z, the codomains of discriminant bilinear and
// quadratic forms. Canonical representatives live in [0,1) and [0,2).

#pragma once

#include <string>

#include "k3kit/bigint.hpp"

namespace k3kit {

namespace detail {
inline BigRat reduce_mod(const BigRat& v, int period) {
  // v - period*floor(v/period)
  BigInt n = num(v), d = den(v);
  BigInt pd = BigInt(period) * d;
  BigInt r = floor_mod(n, pd);
  return BigRat(r, d);
}
}  // namespace detail

class QmodZ {
 public:
  QmodZ() : v_(0) {}
  explicit QmodZ(const BigRat& v) : v_(detail::reduce_mod(v, 1)) {}
  const BigRat& value() const { return v_; }
  bool operator==(const QmodZ& o) const { return v_ == o.v_; }
  bool operator!=(const QmodZ& o) const { return !(*this == o); }
  QmodZ operator+(const QmodZ& o) const { return QmodZ(v_ + o.v_); }
  QmodZ operator-(const QmodZ& o) const { return QmodZ(v_ - o.v_); }
  bool is_zero() const { return v_ == 0; }
  std::string str() const { return to_string(v_) + " mod 1"; }

 private:
  BigRat v_;
};

class QmodTwoZ {
 public:
  QmodTwoZ() : v_(0) {}
  explicit QmodTwoZ(const BigRat& v) : v_(detail::reduce_mod(v, 2)) {}
  const BigRat& value() const { return v_; }
  bool operator==(const QmodTwoZ& o) const { return v_ == o.v_; }
  bool operator!=(const QmodTwoZ& o) const { return !(*this == o); }
  QmodTwoZ operator+(const QmodTwoZ& o) const { return QmodTwoZ(v_ + o.v_); }
  QmodTwoZ operator-(const QmodTwoZ& o) const { return QmodTwoZ(v_ - o.v_); }
  QmodTwoZ scaled(const BigRat& s) const { return QmodTwoZ(v_ * s); }
  bool is_zero() const { return v_ == 0; }
  std::string str() const { return to_string(v_) + " mod 2"; }

 private:
  BigRat v_;
};

}  // namespace k3kit
