#include "ballspec/point_set.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ballspec/errors.hpp"
#include "ballspec/format.hpp"

namespace ballspec {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_bigint(std::string_view s) {
  const bool negative = !s.empty() && s.front() == '-';
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void check_dimension(int dimension) {
  if (dimension < 1) throw std::invalid_argument("point dimension must be >= 1");
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view token) {
  token = trim(token);
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(token)) return std::nullopt;
    return Rational(parse_bigint(token));
  }
  const auto num = token.substr(0, slash);
  const auto den = token.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
  const BigInt d = parse_bigint(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
  return Rational(parse_bigint(num), d);
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

PointSet::PointSet(int dimension, std::vector<Vector> points, std::string label)
    : dimension_(dimension), points_(std::move(points)), label_(std::move(label)) {
  check_dimension(dimension);
  std::set<Vector> seen;
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dimension_) {
      throw std::invalid_argument("point has wrong dimension");
    }
    for (double c : p) {
      if (!std::isfinite(c)) throw std::invalid_argument("point coordinate is not finite");
    }
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate point in set");
  }
}

PointSet::PointSet(int dimension, std::vector<ExactVector> points, std::string label)
    : dimension_(dimension), label_(std::move(label)) {
  check_dimension(dimension);
  std::set<ExactVector> seen;
  points_.reserve(points.size());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dimension_) {
      throw std::invalid_argument("point has wrong dimension");
    }
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate point in set");
    Vector approx;
    approx.reserve(p.size());
    for (const auto& c : p) approx.push_back(to_double(c));
    points_.push_back(std::move(approx));
  }
  exact_ = std::move(points);
}

const std::vector<ExactVector>& PointSet::exact_points() const {
  if (!exact_) throw std::logic_error("point set '" + label_ + "' has no exact coordinates");
  return *exact_;
}

double PointSet::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      best = std::max(best, distance(points_[i], points_[j]));
    }
  }
  return best;
}

double PointSet::max_norm() const {
  double best = 0.0;
  for (const auto& p : points_) best = std::max(best, norm(p));
  return best;
}

PointSet PointSet::without(std::size_t index) const {
  if (index >= size()) throw std::out_of_range("point index out of range");
  if (exact_) {
    auto pts = *exact_;
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(index));
    return PointSet(dimension_, std::move(pts), label_);
  }
  auto pts = points_;
  pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(index));
  return PointSet(dimension_, std::move(pts), label_);
}

double norm(const Vector& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

Vector difference(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

double distance(const Vector& a, const Vector& b) { return norm(difference(a, b)); }

PointSet parse_point_set(std::string_view text, std::string label) {
  std::vector<std::vector<std::string>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (true) {
      const auto comma = line.find(',', pos);
      const auto tok = trim(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
      if (tok.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": empty coordinate");
      }
      tokens.emplace_back(tok);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (!rows.empty() && tokens.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(rows.front().size()) + " coordinates");
    }
    rows.push_back(std::move(tokens));
  }
  if (rows.empty()) throw ParseError("point-set file contains no points");
  const int dimension = static_cast<int>(rows.front().size());

  std::vector<ExactVector> exact;
  bool all_exact = true;
  for (const auto& row : rows) {
    ExactVector p;
    for (const auto& tok : row) {
      auto r = parse_rational(tok);
      if (!r) {
        all_exact = false;
        break;
      }
      p.push_back(std::move(*r));
    }
    if (!all_exact) break;
    exact.push_back(std::move(p));
  }
  try {
    if (all_exact) return PointSet(dimension, std::move(exact), std::move(label));

    std::vector<Vector> points;
    for (const auto& row : rows) {
      Vector p;
      for (const auto& tok : row) {
        if (auto r = parse_rational(tok)) {
          p.push_back(to_double(*r));
          continue;
        }
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size() || errno == ERANGE || !std::isfinite(v)) {
          throw ParseError("malformed coordinate '" + tok + "'");
        }
        p.push_back(v);
      }
      points.push_back(std::move(p));
    }
    return PointSet(dimension, std::move(points), std::move(label));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

PointSet read_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open point-set file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_point_set(buf.str(), path);
}

std::string to_csv(const PointSet& points) {
  std::ostringstream out;
  if (!points.label().empty()) out << "# " << points.label() << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int k = 0; k < points.dimension(); ++k) {
      if (k) out << ',';
      if (points.is_exact()) {
        out << to_string(points.exact_points()[i][static_cast<std::size_t>(k)]);
      } else {
        out << format_g15(points[i][static_cast<std::size_t>(k)]);
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ballspec
