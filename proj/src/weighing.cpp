#include "coinweigh/weighing.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace coinweigh {

Weighing make_weighing(Int n, std::vector<Int> multiplicities) {
  if (n < 1) throw OutOfRange("number of bags must be at least 1");
  if (static_cast<Int>(multiplicities.size()) != n) {
    throw LengthMismatch("expected " + std::to_string(n) + " multiplicities, got " +
                         std::to_string(multiplicities.size()));
  }
  Weighing w{std::move(multiplicities)};
  classify(w);  // fails loudly on overflow
  return w;
}

Classification classify(const Weighing& w) {
  const auto& a = w.multiplicities;
  const Int n = w.n();
  Classification c;
  Int gcd = 0;
  for (Int i = 1; i <= n; ++i) {
    const Int ai = a[i - 1];
    const Int term = checked_mul(i, ai);
    c.signed_total = checked_add(c.signed_total, term);
    c.total_coins = checked_add(c.total_coins, checked_abs(ai));
    c.total_weight = checked_add(c.total_weight, checked_abs(term));
    if (ai < 0 && !c.separation_point) c.separation_point = i;
    gcd = std::gcd(gcd, checked_abs(ai));
  }
  c.outcome = c.signed_total == 0  ? Outcome::Balance
              : c.signed_total < 0 ? Outcome::LeftLighter
                                   : Outcome::LeftHeavier;
  c.tight = c.signed_total == 1 || c.signed_total == -1;
  c.primitive = gcd == 1;
  c.downhill = true;
  for (Int i = 0; i + 1 < n; ++i) {
    if (a[i] <= a[i + 1]) {
      c.downhill = false;
      break;
    }
  }
  if (c.downhill) {
    c.has_duplicates = false;
  } else {
    std::vector<Int> sorted(a);
    std::sort(sorted.begin(), sorted.end());
    c.has_duplicates = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  }
  return c;
}

Weighing scale(const Weighing& w, Int k) {
  if (k < 1) throw OutOfRange("scale factor must be at least 1");
  Weighing out;
  out.multiplicities.reserve(w.multiplicities.size());
  for (Int ai : w.multiplicities) out.multiplicities.push_back(checked_mul(ai, k));
  classify(out);
  return out;
}

namespace {

void append_coins(std::string& s, Int type, Int count, bool spaced) {
  for (Int c = 0; c < count; ++c) {
    if (spaced && !s.empty()) s += ' ';
    s += std::to_string(type);
  }
}

}  // namespace

std::string render(const Weighing& w) {
  const bool spaced = w.n() > 9;
  std::string left, right;
  for (Int i = 1; i <= w.n(); ++i) {
    const Int ai = w.multiplicities[i - 1];
    if (ai > 0) append_coins(left, i, ai, spaced);
    if (ai < 0) append_coins(right, i, -ai, spaced);
  }
  const Classification c = classify(w);
  const char rel = c.outcome == Outcome::Balance ? '=' : c.outcome == Outcome::LeftLighter ? '<' : '>';
  if (spaced) {
    std::string out = left;
    if (!out.empty()) out += ' ';
    out += rel;
    if (!right.empty()) out += ' ' + right;
    return out;
  }
  return left + rel + right;
}

Weighing parse_rendered(Int n, const std::string& text) {
  if (n < 1) throw OutOfRange("number of bags must be at least 1");
  std::vector<Int> mult(static_cast<size_t>(n), 0);
  int side = +1;
  bool saw_rel = false;
  size_t i = 0;
  auto add = [&](Int type) {
    if (type < 1 || type > n) throw ParseError("coin type out of range: " + std::to_string(type));
    mult[type - 1] += side;
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ') {
      ++i;
      continue;
    }
    if (ch == '=' || ch == '<' || ch == '>') {
      if (saw_rel) throw ParseError("multiple relation symbols");
      saw_rel = true;
      side = -1;
      ++i;
      continue;
    }
    if (ch < '0' || ch > '9') throw ParseError(std::string("unexpected character '") + ch + "'");
    size_t j = i;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    if (n <= 9) {
      for (size_t k = i; k < j; ++k) add(text[k] - '0');
    } else {
      Int type = 0;
      auto res = std::from_chars(text.data() + i, text.data() + j, type);
      if (res.ec != std::errc()) throw ParseError("bad coin type token");
      add(type);
    }
    i = j;
  }
  if (!saw_rel) throw ParseError("missing relation symbol");
  return make_weighing(n, std::move(mult));
}

Weighing parse_multiplicity_list(const std::string& text) {
  std::vector<Int> mult;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    size_t b = pos, e = comma;
    while (b < e && text[b] == ' ') ++b;
    while (e > b && text[e - 1] == ' ') --e;
    if (b == e) throw ParseError("empty multiplicity in list");
    Int v = 0;
    auto res = std::from_chars(text.data() + b, text.data() + e, v);
    if (res.ec != std::errc() || res.ptr != text.data() + e) {
      throw ParseError("bad multiplicity: '" + text.substr(pos, comma - pos) + "'");
    }
    mult.push_back(v);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  const Int n = static_cast<Int>(mult.size());
  return make_weighing(n, std::move(mult));
}

std::string weighing_to_json(const Weighing& w) {
  nlohmann::json j;
  j["n"] = w.n();
  j["multiplicities"] = w.multiplicities;
  return j.dump();
}

Weighing weighing_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad weighing JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("multiplicities")) {
    throw ParseError("weighing JSON needs \"n\" and \"multiplicities\"");
  }
  return make_weighing(j["n"].get<Int>(), j["multiplicities"].get<std::vector<Int>>());
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Balance: return "balance";
    case Outcome::LeftLighter: return "left-lighter";
    case Outcome::LeftHeavier: return "left-heavier";
  }
  return "?";
}

std::string format_multiplicities(const Weighing& w) {
  std::string out;
  for (size_t i = 0; i < w.multiplicities.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.multiplicities[i]);
  }
  return out;
}

}  // namespace coinweigh
