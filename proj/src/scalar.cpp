#include "cwlab/scalar.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>

#include "cwlab/error.hpp"

namespace cwlab {

namespace {

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t hash_mpq(const mpq_class& q) {
  std::size_t h = hash_mpz(q.get_num_mpz_t());
  return h ^ (hash_mpz(q.get_den_mpz_t()) * 31 + 0x7f4a7c15ULL + (h << 6));
}

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kParse, "empty rational");
  std::string s(text);
  const auto dot_pos = s.find('.');
  if (dot_pos != std::string::npos) {
    // decimal literal: digits before and after the point
    std::string digits = s.substr(0, dot_pos) + s.substr(dot_pos + 1);
    const std::size_t frac_len = s.size() - dot_pos - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw Error(ErrorCode::kParse, "bad decimal '" + s + "'");
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
      throw Error(ErrorCode::kParse, "bad decimal '" + s + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::kParse, "bad rational '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with 3 b^2 (never equal unless both vanish)
  const mpq_class lhs = a_ * a_;
  const mpq_class rhs = 3 * b_ * b_;
  return lhs > rhs ? sa : sb;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  if (sgn(o.b_) != 0) b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  if (sgn(o.b_) != 0) b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  mpq_class a = a_ * o.a_ + 3 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  if (sgn(b_) == 0) return Scalar(mpq_class(1) / a_);
  // 1/(a + b r3) = (a - b r3) / (a^2 - 3 b^2)
  const mpq_class norm = a_ * a_ - 3 * b_ * b_;
  return Scalar(mpq_class(a_ / norm), mpq_class(-b_ / norm));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (sgn(o.b_) == 0) {
    if (sgn(o.a_) == 0)
      throw Error(ErrorCode::kInvalidArgument, "division by zero");
    a_ /= o.a_;
    if (sgn(b_) != 0) b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

double Scalar::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(3.0);
}

std::string Scalar::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string coef;
  if (b_ == 1) {
    coef = "r3";
  } else if (b_ == -1) {
    coef = "-r3";
  } else {
    coef = b_.get_str() + "r3";
  }
  if (sgn(a_) == 0) return coef;
  if (coef[0] == '-') return a_.get_str() + coef;
  return a_.get_str() + "+" + coef;
}

std::size_t Scalar::hash() const {
  return hash_mpq(a_) * 1000003ULL ^ hash_mpq(b_);
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty scalar");

  // split into signed terms
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '/' &&
        s[i - 1] != '*') {
      terms.push_back(cur);
      cur.clear();
    }
    cur.push_back(ch);
  }
  terms.push_back(cur);

  mpq_class a, b;
  for (std::string term : terms) {
    bool radical = false;
    if (term.size() >= 2 && term.compare(term.size() - 2, 2, "r3") == 0) {
      radical = true;
      term.erase(term.size() - 2);
      if (!term.empty() && term.back() == '*') term.pop_back();
    }
    mpq_class value;
    if (radical && (term.empty() || term == "+" || term == "-")) {
      value = term == "-" ? -1 : 1;
    } else {
      value = parse_rational(term);
    }
    (radical ? b : a) += value;
  }
  return Scalar(a, b);
}

std::size_t VecHash::operator()(const Vec& v) const {
  std::size_t h = v.size();
  for (const auto& s : v) h = h * 0x100000001b3ULL ^ s.hash();
  return h;
}

Scalar dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::kDimensionMismatch, "dot: size mismatch");
  Scalar acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() || y[i].is_zero()) continue;
    acc += x[i] * y[i];
  }
  return acc;
}

Vec operator+(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::kDimensionMismatch, "vector add: size mismatch");
  Vec out(x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += y[i];
  return out;
}

Vec operator-(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::kDimensionMismatch, "vector sub: size mismatch");
  Vec out(x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= y[i];
  return out;
}

Vec operator-(const Vec& x) {
  Vec out;
  out.reserve(x.size());
  for (const auto& s : x) out.push_back(-s);
  return out;
}

Vec operator*(const Scalar& s, const Vec& x) {
  Vec out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back(s * e);
  return out;
}

void axpy(Vec& x, const Scalar& s, const Vec& y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::kDimensionMismatch, "axpy: size mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!y[i].is_zero()) x[i] += s * y[i];
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec parse_vec(std::string_view csv) {
  Vec out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    out.push_back(Scalar::parse(csv.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].to_string();
  }
  os << ')';
  return os.str();
}

std::vector<double> to_double(const Vec& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.to_double());
  return out;
}

}  // namespace cwlab
