#include "tropcol/rational.hpp"

#include <cctype>

namespace tropcol {

namespace {

bool all_digits(std::string_view s) {
	if (s.empty()) return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c))) return false;
	return true;
}

} // namespace

Rat parse_rational(std::string_view text) {
	std::string_view s = text;
	if (s.empty()) throw parse_error("empty rational literal");

	bool negative = false;
	if (s.front() == '+' || s.front() == '-') {
		negative = (s.front() == '-');
		s.remove_prefix(1);
	}
	if (s.empty()) throw parse_error("sign without digits in '" + std::string(text) + "'");

	auto slash = s.find('/');
	auto dot = s.find('.');
	Rat value;
	if (slash != std::string_view::npos) {
		std::string_view num = s.substr(0, slash);
		std::string_view den = s.substr(slash + 1);
		if (!all_digits(num) || !all_digits(den))
			throw parse_error("malformed fraction '" + std::string(text) + "'");
		Int n(std::string(num), 10), d(std::string(den), 10);
		if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
		value = Rat(n) / Rat(d);
	} else if (dot != std::string_view::npos) {
		std::string_view whole = s.substr(0, dot);
		std::string_view frac = s.substr(dot + 1);
		if (whole.empty() && frac.empty())
			throw parse_error("malformed decimal '" + std::string(text) + "'");
		if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
			throw parse_error("malformed decimal '" + std::string(text) + "'");
		Int n = whole.empty() ? Int(0) : Int(std::string(whole), 10);
		Int scale = 1;
		for (char c : frac) {
			n = n * 10 + (c - '0');
			scale *= 10;
		}
		value = Rat(n) / Rat(scale);
	} else {
		if (!all_digits(s))
			throw parse_error("malformed number '" + std::string(text) + "'");
		value = Rat(Int(std::string(s), 10));
	}
	value.canonicalize();
	return negative ? Rat(-value) : value;
}

std::string to_string(const Rat& q) {
	return q.get_str();
}

} // namespace tropcol
