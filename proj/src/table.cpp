#include "homok/table.hpp"

#include <cctype>
#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <optional>
#include <variant>

#include "homok/arith.hpp"
#include "homok/cocyclic.hpp"
#include "homok/error.hpp"

namespace homok {

namespace {

std::int64_t parse_count(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 12) throw Error(Errc::parse, "bad number in '" + std::string(whole) + "'");
  std::int64_t v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw Error(Errc::parse, "unexpected '" + std::string(1, ch) + "' in '" + std::string(whole) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string list_text(const InvariantFactors& f) { return f.to_string(); }

}  // namespace

FamilyTemplate FamilyTemplate::parse(std::string_view text) {
  std::string expanded(text);
  if (text.starts_with("homocyclic:")) {
    const std::string e(text.substr(11));
    parse_count(e, text);
    expanded = "p**" + e + ",p**" + e;
  } else if (text.starts_with("elementary:")) {
    const std::string n(text.substr(11));
    parse_count(n, text);
    expanded = "p^" + n;
  }
  FamilyTemplate t;
  t.text_ = std::string(text);
  if (expanded.empty()) throw Error(Errc::parse, "empty family template");
  for (std::string_view raw : split(expanded, ',')) {
    Term term;
    std::string_view base = raw;
    // `**` binds before `^`
    std::size_t caret = std::string_view::npos;
    for (std::size_t i = 0; i < raw.size(); ++i)
      if (raw[i] == '^') caret = i;
    if (caret != std::string_view::npos) {
      base = raw.substr(0, caret);
      term.repeat = parse_count(raw.substr(caret + 1), text);
      if (term.repeat < 1) throw Error(Errc::parse, "repetition must be >= 1 in '" + std::string(text) + "'");
    }
    if (base == "p") {
      term.uses_p = true;
      term.value = 1;
    } else if (base.starts_with("p**")) {
      term.uses_p = true;
      term.value = parse_count(base.substr(3), text);
      if (term.value < 1) throw Error(Errc::parse, "exponent must be >= 1 in '" + std::string(text) + "'");
    } else {
      term.value = parse_count(base, text);
      if (term.value < 1) throw Error(Errc::parse, "factor orders must be >= 1 in '" + std::string(text) + "'");
    }
    t.terms_.push_back(term);
  }
  return t;
}

std::string FamilyTemplate::instantiate(std::int64_t p) const {
  std::string out;
  for (const Term& term : terms_) {
    const std::int64_t base = term.uses_p ? arith::checked_pow(p, static_cast<std::uint64_t>(term.value)) : term.value;
    if (!out.empty()) out += ',';
    out += std::to_string(base);
    if (term.repeat != 1) out += "^" + std::to_string(term.repeat);
  }
  return out;
}

std::vector<std::int64_t> parse_prime_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (std::string_view item : split(text, ',')) {
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      const std::int64_t p = parse_count(item, text);
      if (!arith::is_prime(p)) throw Error(Errc::parse, std::to_string(p) + " is not prime");
      out.push_back(p);
      continue;
    }
    const std::int64_t lo = parse_count(item.substr(0, dots), text);
    const std::int64_t hi = parse_count(item.substr(dots + 2), text);
    for (std::int64_t p = lo; p <= hi; ++p)
      if (arith::is_prime(p)) out.push_back(p);
  }
  if (out.empty()) throw Error(Errc::parse, "no primes in '" + std::string(text) + "'");
  return out;
}

TableResult generate_table(const FamilyTemplate& family, const std::vector<std::int64_t>& primes,
                           std::int64_t order_cap) {
  using Row = std::optional<std::variant<std::string, Error>>;
  std::vector<Row> rows(primes.size());
  auto compute = [&](std::size_t i) {
    const std::int64_t p = primes[i];
    try {
      const Group G = Group::parse(family.instantiate(p), order_cap);
      const SK1Report r = sk1_invariants(G);
      std::string line = std::to_string(p);
      line += ',' + csv_field(G.canonical_spec());
      line += ',' + csv_field(list_text(r.hmg));
      line += ',' + r.coc.order().get_str();
      line += ',' + csv_field(r.theorem_4_1_applies ? list_text(r.quotient) : std::string());
      line += r.theorem_4_1_applies ? ",true" : ",false";
      rows[i] = line;
    } catch (const Error& e) {
      rows[i] = e;
    }
  };
  // One task per prime, at most hardware_concurrency running at once.
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::min<std::size_t>(primes.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < primes.size(); i = next++) compute(i);
    }));
  }
  for (auto& f : pool) f.get();

  TableResult out;
  out.csv = std::string(kTableHeader) + "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = *rows[i];
    if (const auto* line = std::get_if<std::string>(&row)) {
      out.csv += *line + "\n";
      continue;
    }
    const Error& e = std::get<Error>(row);
    if (e.code() != Errc::cap_exceeded && e.code() != Errc::overflow) throw e;
    out.skipped.push_back("p=" + std::to_string(primes[i]) + ": " + e.what());
  }
  return out;
}

}  // namespace homok
