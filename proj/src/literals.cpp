#include "k3fm/literals.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "k3fm/errors.hpp"

namespace k3fm {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

std::int64_t parse_integer(std::string_view text, std::string_view what) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

struct Token {
  std::string_view spelling;
  Surface surface;
  bool is_ell;
};

// Longest spellings first so "Hh" is not read as "H" followed by garbage.
constexpr Token kTokens[] = {
    {"Hh", Surface::Xhat, false},
    {"lh", Surface::Xhat, true},
    {"H", Surface::X, false},
    {"l", Surface::X, true},
};

void append_term(std::string& out, std::int64_t coeff, std::string_view token) {
  if (coeff == 0) return;
  if (coeff < 0) {
    out.push_back('-');
  } else if (!out.empty()) {
    out.push_back('+');
  }
  // Magnitude via unsigned to cope with INT64_MIN.
  const auto magnitude = coeff < 0 ? 0 - static_cast<std::uint64_t>(coeff) : static_cast<std::uint64_t>(coeff);
  if (magnitude != 1) out += std::to_string(magnitude);
  out += token;
}

}  // namespace

DivisorClass parse_divisor(std::string_view text, std::optional<Surface> surface_hint) {
  const std::string body = strip_spaces(text);
  if (body.empty()) throw ParseError("empty divisor literal");
  if (body == "0") {
    if (!surface_hint) throw ParseError("bare 0 divisor needs an explicit surface");
    return zero_divisor(*surface_hint);
  }

  std::optional<Surface> surface;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t term_start = pos;
    bool negative = false;
    if (body[pos] == '+' || body[pos] == '-') {
      negative = body[pos] == '-';
      ++pos;
    } else if (term_start != 0) {
      throw ParseError("expected '+' or '-' in divisor literal '" + body + "'");
    }
    const std::size_t digits_start = pos;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    std::int64_t coeff = 1;
    if (pos > digits_start) {
      coeff = parse_integer(std::string_view(body).substr(digits_start, pos - digits_start),
                            "divisor coefficient");
    }
    const Token* match = nullptr;
    for (const auto& token : kTokens) {
      if (std::string_view(body).substr(pos).starts_with(token.spelling)) {
        match = &token;
        break;
      }
    }
    if (match == nullptr) {
      throw ParseError("unknown token in divisor literal '" + body + "'");
    }
    pos += match->spelling.size();
    if (surface && *surface != match->surface) {
      throw ParseError("divisor literal '" + body + "' mixes tokens of both surfaces");
    }
    surface = match->surface;
    if (negative) coeff = -coeff;
    try {
      (match->is_ell ? b : a) = checked::add(match->is_ell ? b : a, coeff);
    } catch (const DomainError&) {
      throw ParseError("divisor coefficient out of range in '" + body + "'");
    }
  }
  if (surface_hint && *surface_hint != *surface) {
    throw ParseError("divisor literal '" + body + "' does not live on surface " +
                     std::string(to_string(*surface_hint)));
  }
  return {a, b, *surface};
}

MukaiVector parse_vector(std::string_view text, std::optional<Surface> surface_hint) {
  const std::string body = strip_spaces(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw ParseError("vector literal must look like (r, <divisor>, s): '" + std::string(text) + "'");
  }
  const std::string_view inner = std::string_view(body).substr(1, body.size() - 2);
  if (std::count(inner.begin(), inner.end(), ',') != 2) {
    throw ParseError("vector literal needs exactly three components: '" + std::string(text) + "'");
  }
  const auto first = inner.find(',');
  const auto second = inner.find(',', first + 1);
  const auto rank = parse_integer(inner.substr(0, first), "rank");
  const auto divisor = parse_divisor(inner.substr(first + 1, second - first - 1), surface_hint);
  const auto s = parse_integer(inner.substr(second + 1), "s-component");
  return {rank, divisor, s};
}

std::string format_divisor(const DivisorClass& d) {
  const bool hat = d.surface == Surface::Xhat;
  std::string out;
  append_term(out, d.a, hat ? "Hh" : "H");
  append_term(out, d.b, hat ? "lh" : "l");
  return out.empty() ? "0" : out;
}

std::string format_vector(const MukaiVector& v) {
  return "(" + std::to_string(v.r) + "," + format_divisor(v.c) + "," + std::to_string(v.s) + ")";
}

std::string format_chern(const ChernCharacter& ch) {
  return "(" + std::to_string(ch.ch0) + "," + format_divisor(ch.c1) + "," + std::to_string(ch.ch2) + ")";
}

}  // namespace k3fm
