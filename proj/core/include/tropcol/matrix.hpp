#ifndef TROPCOL_MATRIX_HPP
#define TROPCOL_MATRIX_HPP

#include "tropcol/rational.hpp"

#include <iosfwd>
#include <vector>

namespace tropcol {

// Dense d x n matrix of exact rationals; columns are points of TP^{d-1}.
class RatMatrix {
public:
	RatMatrix() = default;
	RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(size_t(rows) * cols) {}
	RatMatrix(int rows, int cols, std::vector<Rat> entries);

	int rows() const { return rows_; }
	int cols() const { return cols_; }

	Rat& at(int r, int c) { return entries_[size_t(r) * cols_ + c]; }
	const Rat& at(int r, int c) const { return entries_[size_t(r) * cols_ + c]; }

	RatMatrix transposed() const;
	bool is_zero() const;

	friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
	int rows_ = 0;
	int cols_ = 0;
	std::vector<Rat> entries_;
};

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& s, const RatMatrix& m);

// A point of TP^{d-1} in the canonical chart coords[0] == 0.
struct ProjectivePoint {
	std::vector<Rat> coords;

	int dim() const { return int(coords.size()); }
	friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

// Subtracts v[0] from every coordinate.
ProjectivePoint normalize_point(const std::vector<Rat>& v);

// Subtracts the first entry of every column; rows keep their count.
RatMatrix normalize_columns(const RatMatrix& m);

// Matrix text format: one row per line, whitespace-separated entries, each an
// integer, decimal or p/q fraction. Blank lines and lines starting with '#'
// are ignored. Throws parse_error with 1-based line/column on bad input.
RatMatrix read_matrix(std::istream& in);
RatMatrix read_matrix_string(const std::string& text);
std::string write_matrix(const RatMatrix& m);

} // namespace tropcol

#endif
