#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gpath/cli.hpp"

namespace gpath::cli {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void append_token(std::string_view token, std::vector<Rational>& out) {
  token = strip(token);
  if (token.empty()) throw UsageError("empty list element");
  const auto dots = token.find("..");
  if (dots == std::string_view::npos) {
    out.push_back(parse_rational(token));
    return;
  }
  const Rational lo = parse_rational(token.substr(0, dots));
  const Rational hi = parse_rational(token.substr(dots + 2));
  if (boost::multiprecision::denominator(lo) != 1 || boost::multiprecision::denominator(hi) != 1) {
    throw UsageError("range bounds must be integers: '" + std::string(token) + "'");
  }
  if (hi < lo) throw UsageError("empty range: '" + std::string(token) + "'");
  if (hi - lo > 10'000'000) throw UsageError("range too long: '" + std::string(token) + "'");
  for (Rational x = lo; x <= hi; x += 1) out.push_back(x);
}

}  // namespace

std::vector<Rational> parse_list(std::string_view text) {
  std::string_view body = strip(text);
  if (!body.empty() && (body.front() == '(' || body.front() == '{' || body.front() == '[')) {
    body.remove_prefix(1);
    if (body.empty() || (body.back() != ')' && body.back() != '}' && body.back() != ']')) {
      throw UsageError("unbalanced brackets in list");
    }
    body.remove_suffix(1);
  }
  if (strip(body).empty()) throw UsageError("empty list");
  std::vector<Rational> out;
  try {
    std::size_t pos = 0;
    while (true) {
      const auto comma = body.find(',', pos);
      append_token(body.substr(pos, comma == std::string_view::npos ? body.npos : comma - pos), out);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return out;
}

RealSet parse_set(std::string_view text) {
  const std::string path(strip(text));
  std::vector<Rational> elems;
  std::error_code ec;
  if (!path.empty() && std::filesystem::is_regular_file(path, ec)) {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot read set file '" + path + "'");
    std::string line;
    while (std::getline(file, line)) {
      const std::string_view l = strip(line);
      if (l.empty() || l.front() == '#') continue;
      const std::vector<Rational> part = parse_list(l);
      elems.insert(elems.end(), part.begin(), part.end());
    }
    if (elems.empty()) throw UsageError("set file '" + path + "' has no elements");
  } else {
    elems = parse_list(text);
  }
  try {
    return RealSet(std::move(elems));
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

std::pair<Rational, Rational> parse_ap(std::string_view text) {
  const std::vector<Rational> v = parse_list(text);
  if (v.size() != 2) throw UsageError("--ap expects 'first,step'");
  if (v[1] == 0) throw UsageError("--ap step must be nonzero");
  return {v[0], v[1]};
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultBudget;
}

}  // namespace gpath::cli
