#include "divtorus/rational.hpp"

#include <sstream>

namespace divtorus {

std::optional<Rat> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // mpq_set_str accepts whitespace and some exotic forms; validate first.
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) return std::nullopt;
    return Rat(mpz_class(s, 10));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) return std::nullopt;
  mpz_class d(den, 10);
  if (d == 0) return std::nullopt;
  Rat q(mpz_class(num, 10), d);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::optional<RatVec> parse_rational_tuple(const std::string& csv) {
  RatVec out;
  for (const auto& p : split_csv(csv)) {
    auto q = parse_rational(p);
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  return out;
}

std::optional<std::vector<std::int64_t>> parse_int_tuple(const std::string& csv) {
  std::vector<std::int64_t> out;
  for (const auto& p : split_csv(csv)) {
    auto q = parse_rational(p);
    if (!q || !is_integral(*q) || !q->get_num().fits_slong_p()) return std::nullopt;
    out.push_back(q->get_num().get_si());
  }
  return out;
}

bool is_integral(const Rat& x) { return x.get_den() == 1; }

bool all_integral(const RatVec& xs) {
  for (const auto& x : xs)
    if (!is_integral(x)) return false;
  return true;
}

std::string tuple_to_string(const RatVec& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << rat_to_string(xs[i]);
  }
  return os.str();
}

std::string tuple_to_string(const std::vector<std::int64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  return os.str();
}

}  // namespace divtorus
