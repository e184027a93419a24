#include "toroidal/series.hpp"

#include <algorithm>
#include <sstream>

#include "toroidal/errors.hpp"

namespace toroidal {

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  if (a >= TruncSeries::kExact || b >= TruncSeries::kExact) return TruncSeries::kExact;
  return std::min(a + b, TruncSeries::kExact);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorCode::ParseError, "empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      fail(ErrorCode::ParseError, "bad rational '" + text + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    fail(ErrorCode::ParseError, "bad rational '" + text + "'");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(body, 10) != 0) fail(ErrorCode::ParseError, "bad rational '" + text + "'");
  if (q.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

TruncSeries::TruncSeries(Terms terms, std::int64_t window)
    : terms_(std::move(terms)), window_(window) {
  for (auto& [e, c] : terms_)
    if (e.size() != 3 || !e.is_nonnegative())
      fail(ErrorCode::MalformedGerm, "series exponent " + e.to_string() + " invalid");
  normalize();
}

void TruncSeries::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || it->first.total_degree() > window_)
      it = terms_.erase(it);
    else
      ++it;
  }
}

TruncSeries TruncSeries::constant(const Rational& c, std::int64_t window) {
  return monomial(ExpVec{0, 0, 0}, c, window);
}

TruncSeries TruncSeries::monomial(const ExpVec& e, const Rational& c, std::int64_t window) {
  Terms t;
  t.emplace(e, c);
  return TruncSeries(std::move(t), window);
}

TruncSeries TruncSeries::translated_axis(std::size_t axis, const Rational& c) {
  Terms t;
  t.emplace(ExpVec{0, 0, 0}, c);
  t.emplace(ExpVec::unit(3, axis), Rational(1));
  return TruncSeries(std::move(t), kExact);
}

Rational TruncSeries::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncSeries::constant_term() const { return coefficient(ExpVec{0, 0, 0}); }

bool TruncSeries::is_unit() const { return window_ >= 0 && constant_term() != 0; }

std::int64_t TruncSeries::min_degree() const {
  std::int64_t m = saturating_add(window_, 1);
  for (auto& [e, c] : terms_) m = std::min(m, e.total_degree());
  return m;
}

std::int64_t TruncSeries::ord_along(std::size_t axis) const {
  if (terms_.empty())
    fail(ErrorCode::TruncationInsufficient,
         "no known term within window " + std::to_string(window_));
  std::int64_t m = std::numeric_limits<std::int64_t>::max();
  for (auto& [e, c] : terms_) m = std::min(m, e[axis]);
  return m;
}

ExpVec TruncSeries::support_min() const {
  if (terms_.empty()) fail(ErrorCode::TruncationInsufficient, "empty support");
  ExpVec m = terms_.begin()->first;
  for (auto& [e, c] : terms_) m = ExpVec::min(m, e);
  return m;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries r(std::min(window_, o.window_));
  r.terms_ = terms_;
  for (auto& [e, c] : o.terms_) r.terms_[e] += c;
  r.normalize();
  return r;
}

TruncSeries TruncSeries::operator-() const { return scaled(-1); }

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  std::int64_t w = std::min(saturating_add(window_, o.min_degree()),
                            saturating_add(o.window_, min_degree()));
  TruncSeries r(w);
  for (auto& [ea, ca] : terms_)
    for (auto& [eb, cb] : o.terms_) {
      ExpVec e = ea + eb;
      if (e.total_degree() <= w) r.terms_[e] += ca * cb;
    }
  r.normalize();
  return r;
}

TruncSeries TruncSeries::scaled(const Rational& c) const {
  TruncSeries r(window_);
  if (c == 0) return r;
  for (auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

TruncSeries TruncSeries::times_monomial(const ExpVec& m) const {
  if (!m.is_nonnegative()) fail(ErrorCode::InvalidArgument, "negative monomial factor");
  TruncSeries r(saturating_add(window_, m.total_degree()));
  for (auto& [e, v] : terms_) r.terms_.emplace(e + m, v);
  return r;
}

TruncSeries TruncSeries::divided_by_monomial(const ExpVec& m) const {
  std::int64_t w = window_ >= kExact ? kExact : window_ - m.total_degree();
  TruncSeries r(w);
  for (auto& [e, v] : terms_) {
    if (!m.divides(e))
      fail(ErrorCode::MalformedGerm, "term " + e.to_string() + " not divisible by " +
                                         m.to_string());
    r.terms_.emplace(e - m, v);
  }
  r.normalize();
  return r;
}

TruncSeries TruncSeries::derivative(std::size_t axis) const {
  TruncSeries r(window_ >= kExact ? kExact : window_ - 1);
  for (auto& [e, v] : terms_) {
    if (e[axis] == 0) continue;
    ExpVec d = e;
    d[axis] -= 1;
    r.terms_.emplace(d, v * Rational(static_cast<long>(e[axis])));
  }
  r.normalize();
  return r;
}

TruncSeries TruncSeries::pow(unsigned k) const {
  TruncSeries r = constant(1);
  TruncSeries base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (!is_unit()) fail(ErrorCode::TruncationInsufficient, "series is not a unit");
  // 1/(c(1 - t)) = (1/c) * sum t^k, with t of order >= 1.
  const Rational c = constant_term();
  TruncSeries t = constant(1, window_) - scaled(1 / c);
  if (is_exact() && !t.known_zero())
    fail(ErrorCode::TruncationInsufficient,
         "inverse of a non-constant exact unit needs a truncation window");
  TruncSeries acc = constant(1, window_);
  TruncSeries power = constant(1, window_);
  for (std::int64_t k = 1; k <= window_ && !t.known_zero(); ++k) {
    power = power * t;
    if (power.known_zero()) break;
    acc = acc + power;
  }
  return acc.scaled(1 / c).truncated(window_);
}

TruncSeries TruncSeries::truncated(std::int64_t window) const {
  TruncSeries r = *this;
  r.window_ = std::min(window_, window);
  r.normalize();
  return r;
}

TruncSeries TruncSeries::substitute(const std::array<TruncSeries, 3>& images) const {
  // Unknown tail terms (degree > window) map into degree >= (window+1)*mu.
  std::int64_t mu = kExact;
  for (auto& im : images) mu = std::min(mu, im.min_degree());
  std::int64_t w = kExact;
  if (!is_exact()) {
    w = mu == 0 ? -1 : saturating_add(window_, 1) * mu - 1;
    if (mu >= kExact) w = kExact;
  }
  TruncSeries r(w);
  for (auto& [e, c] : terms_) {
    TruncSeries t = constant(c);
    for (std::size_t i = 0; i < 3; ++i)
      if (e[i] > 0) t = t * images[i].pow(static_cast<unsigned>(e[i]));
    r = r + t;
  }
  return r.truncated(w);
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    os << (first ? "" : " + ") << format_rational(c) << "*" << e;
    first = false;
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(deg>" << window_ << ")";
  return os.str();
}

}  // namespace toroidal
