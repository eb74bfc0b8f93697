#include "tropcol/matrix.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace tropcol {

RatMatrix::RatMatrix(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
	if (entries_.size() != size_t(rows) * cols)
		throw std::invalid_argument("RatMatrix: entry count does not match shape");
}

RatMatrix RatMatrix::transposed() const {
	RatMatrix t(cols_, rows_);
	for (int r = 0; r < rows_; ++r)
		for (int c = 0; c < cols_; ++c)
			t.at(c, r) = at(r, c);
	return t;
}

bool RatMatrix::is_zero() const {
	for (const Rat& e : entries_)
		if (e != 0) return false;
	return true;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
	if (a.rows() != b.rows() || a.cols() != b.cols())
		throw std::invalid_argument("matrix shape mismatch in +");
	RatMatrix out(a.rows(), a.cols());
	for (int r = 0; r < a.rows(); ++r)
		for (int c = 0; c < a.cols(); ++c)
			out.at(r, c) = a.at(r, c) + b.at(r, c);
	return out;
}

RatMatrix operator*(const Rat& s, const RatMatrix& m) {
	RatMatrix out(m.rows(), m.cols());
	for (int r = 0; r < m.rows(); ++r)
		for (int c = 0; c < m.cols(); ++c)
			out.at(r, c) = s * m.at(r, c);
	return out;
}

ProjectivePoint normalize_point(const std::vector<Rat>& v) {
	if (v.empty()) throw std::invalid_argument("normalize_point: empty coordinate vector");
	ProjectivePoint p;
	p.coords.reserve(v.size());
	for (const Rat& x : v) p.coords.push_back(x - v[0]);
	return p;
}

RatMatrix normalize_columns(const RatMatrix& m) {
	RatMatrix out(m.rows(), m.cols());
	for (int c = 0; c < m.cols(); ++c)
		for (int r = 0; r < m.rows(); ++r)
			out.at(r, c) = m.at(r, c) - m.at(0, c);
	return out;
}

RatMatrix read_matrix(std::istream& in) {
	std::vector<std::vector<Rat>> rows;
	std::string line;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		size_t pos = line.find_first_not_of(" \t\r");
		if (pos == std::string::npos || line[pos] == '#') continue;
		std::vector<Rat> row;
		size_t i = pos;
		while (i < line.size()) {
			while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
			if (i >= line.size()) break;
			size_t start = i;
			while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
			std::string tok = line.substr(start, i - start);
			try {
				row.push_back(parse_rational(tok));
			} catch (const parse_error& e) {
				throw parse_error(e.what(), lineno, int(start) + 1);
			}
		}
		if (!rows.empty() && row.size() != rows.front().size())
			throw parse_error("row has " + std::to_string(row.size()) + " entries, expected " +
			                      std::to_string(rows.front().size()),
			                  lineno, 1);
		rows.push_back(std::move(row));
	}
	if (rows.empty()) throw parse_error("matrix is empty");
	RatMatrix m(int(rows.size()), int(rows.front().size()));
	for (int r = 0; r < m.rows(); ++r)
		for (int c = 0; c < m.cols(); ++c)
			m.at(r, c) = std::move(rows[r][c]);
	return m;
}

RatMatrix read_matrix_string(const std::string& text) {
	std::istringstream in(text);
	return read_matrix(in);
}

std::string write_matrix(const RatMatrix& m) {
	std::string out;
	for (int r = 0; r < m.rows(); ++r) {
		for (int c = 0; c < m.cols(); ++c) {
			if (c) out += ' ';
			out += to_string(m.at(r, c));
		}
		out += '\n';
	}
	return out;
}

} // namespace tropcol
