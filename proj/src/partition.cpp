#include "sgm/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sgm {

bool GradedLexDescending::operator()(const Partition& a, const Partition& b) const {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa > wb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition to_partition(const std::vector<int>& exponents) {
  Partition p;
  for (int e : exponents)
    if (e > 0) p.push_back(e);
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, Partition& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (parts_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    // the remaining parts are each <= part
    if (static_cast<long>(part) * parts_left < remaining) break;
    cur.push_back(part);
    partitions_rec(remaining - part, part, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d, int max_parts) {
  std::vector<Partition> out;
  if (d < 0 || max_parts < 0) return out;
  Partition cur;
  partitions_rec(d, d, max_parts, cur, out);
  return out;
}

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int i = 1; i <= p.front(); ++i) {
    int count = 0;
    for (int part : p)
      if (part >= i) ++count;
    c.push_back(count);
  }
  return c;
}

Integer multiplicity_factorial(const Partition& p) {
  std::map<int, unsigned> counts;
  for (int part : p) ++counts[part];
  Integer r = 1;
  for (auto [value, count] : counts) r *= factorial(count);
  return r;
}

Integer padded_multiplicity_factorial(const Partition& p, int n) {
  if (static_cast<int>(p.size()) > n) throw std::invalid_argument("partition longer than variable count");
  return multiplicity_factorial(p) * factorial(static_cast<unsigned>(n - static_cast<int>(p.size())));
}

Partition parse_partition(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<int> parts;
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition '" + text + "'");
    }
    if (used != tok.size() || v < 0) throw std::invalid_argument("malformed partition '" + text + "'");
    parts.push_back(v);
  }
  return to_partition(parts);
}

std::string format_partition(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace sgm
