#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bott {

/// Largest supported dimension. A matrix row, a column, and a square-free
/// monomial each fit into one 64-bit word.
inline constexpr int max_dimension = 64;

/// Default bound on the number of free entries n(n-1)/2 accepted by
/// exhaustive enumeration (28 bits = all matrices up to n = 8).
inline constexpr int default_enumeration_bit_cap = 28;

/// Error raised by the text parser, carrying a 1-based source position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, int line, int column)
        : std::runtime_error(message + " (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// An n-by-n strictly upper triangular matrix over {0,1}.
///
/// Rows and columns are indexed 1..n. Entry (i,j) may be set only for i < j;
/// the constructor rejects anything on or below the diagonal. Instances are
/// immutable after construction and safe to share across threads.
class BottMatrix {
public:
    /// The zero matrix of dimension n.
    explicit BottMatrix(int n) : n_(check_dimension(n)), rows_(static_cast<std::size_t>(n), 0), cols_(static_cast<std::size_t>(n), 0) {}

    /// Matrix with exactly the listed (row, column) entries set to 1.
    BottMatrix(int n, const std::vector<std::pair<int, int>>& entries) : BottMatrix(n) {
        for (auto [i, j] : entries) {
            if (i < 1 || i > n_ || j < 1 || j > n_)
                throw std::out_of_range("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") outside 1.." + std::to_string(n_));
            if (i >= j)
                throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") not strictly above the diagonal");
            rows_[static_cast<std::size_t>(i - 1)] |= std::uint64_t{1} << (j - 1);
            cols_[static_cast<std::size_t>(j - 1)] |= std::uint64_t{1} << (i - 1);
        }
    }

    [[nodiscard]] int n() const { return n_; }

    [[nodiscard]] bool entry(int row, int col) const {
        check_index(row);
        check_index(col);
        return (rows_[static_cast<std::size_t>(row - 1)] >> (col - 1)) & 1u;
    }

    /// Row i as a bit mask: bit (j-1) is set iff a_{ij} = 1.
    [[nodiscard]] std::uint64_t row_mask(int row) const {
        check_index(row);
        return rows_[static_cast<std::size_t>(row - 1)];
    }

    /// Column j as a bit mask: bit (i-1) is set iff a_{ij} = 1.
    [[nodiscard]] std::uint64_t column_mask(int col) const {
        check_index(col);
        return cols_[static_cast<std::size_t>(col - 1)];
    }

    /// Column indices j with a_{ij} = 1, in increasing order.
    [[nodiscard]] std::vector<int> row_columns(int row) const {
        std::vector<int> out;
        for (std::uint64_t m = row_mask(row); m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    [[nodiscard]] bool is_zero() const {
        for (std::uint64_t r : rows_)
            if (r != 0) return false;
        return true;
    }

    friend bool operator==(const BottMatrix& a, const BottMatrix& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    static int check_dimension(int n) {
        if (n < 1) throw std::invalid_argument("dimension must be at least 1");
        if (n > max_dimension)
            throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds cap " +
                                        std::to_string(max_dimension));
        return n;
    }

    void check_index(int i) const {
        if (i < 1 || i > n_)
            throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }

    int n_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint64_t> cols_;
};

/// Same dimension as `a`; rows listed in `rows` copied, all others zeroed.
inline BottMatrix row_submatrix(const BottMatrix& a, const std::vector<int>& rows) {
    std::vector<std::pair<int, int>> entries;
    for (int i : rows) {
        if (i < 1 || i > a.n())
            throw std::out_of_range("row index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(a.n()));
        for (int j : a.row_columns(i)) entries.emplace_back(i, j);
    }
    return BottMatrix(a.n(), entries);
}

/// Indices of the nonzero rows, in increasing order.
inline std::vector<int> support(const BottMatrix& a) {
    std::vector<int> out;
    for (int i = 1; i <= a.n(); ++i)
        if (a.row_mask(i) != 0) out.push_back(i);
    return out;
}

/// True iff every row has an even number of 1-entries.
inline bool is_orientable(const BottMatrix& a) {
    for (int i = 1; i <= a.n(); ++i)
        if (std::popcount(a.row_mask(i)) % 2 != 0) return false;
    return true;
}

/// Rank of the holonomy group: the manifold's holonomy is (Z/2)^k where k is
/// the number of linearly independent rows over GF(2). Equals the count of
/// nonzero rows whenever those rows are independent, which covers every
/// matrix in staircase form but not all matrices.
inline int holonomy_rank(const BottMatrix& a) {
    std::vector<std::uint64_t> basis;
    for (int i = 1; i <= a.n(); ++i) {
        std::uint64_t v = a.row_mask(i);
        for (std::uint64_t b : basis)
            v = std::min(v, v ^ b);
        if (v != 0) basis.push_back(v);
    }
    return static_cast<int>(basis.size());
}

/// Stream of every Bott matrix of dimension n, each exactly once.
///
/// Order is lexicographic over the flattened strictly-upper-triangle bit
/// vector, row-major: position (1,2) varies slowest, (n-1,n) fastest, so the
/// zero matrix comes first. The stream is single-consumer, but `at` gives
/// random access for independent parallel consumers.
class MatrixEnumeration {
public:
    explicit MatrixEnumeration(int n, int bit_cap = default_enumeration_bit_cap) : n_(n), next_(0) {
        if (n < 1 || n > max_dimension)
            throw std::invalid_argument("dimension " + std::to_string(n) + " outside 1.." +
                                        std::to_string(max_dimension));
        bits_ = n * (n - 1) / 2;
        if (bits_ > bit_cap)
            throw std::invalid_argument("enumeration of n=" + std::to_string(n) + " needs " +
                                        std::to_string(bits_) + " free entries, above the cap of " +
                                        std::to_string(bit_cap));
        if (bits_ > 62)
            throw std::invalid_argument("a stream of 2^" + std::to_string(bits_) +
                                        " matrices is not representable");
    }

    /// Total number of matrices in the stream: 2^(n(n-1)/2).
    [[nodiscard]] std::uint64_t size() const { return std::uint64_t{1} << bits_; }

    [[nodiscard]] bool done() const { return next_ >= size(); }

    BottMatrix next() {
        if (done()) throw std::out_of_range("enumeration exhausted");
        return at(next_++);
    }

    /// The index-th matrix of the stream, independent of the cursor.
    [[nodiscard]] BottMatrix at(std::uint64_t index) const {
        if (index >= size()) throw std::out_of_range("enumeration index out of range");
        std::vector<std::pair<int, int>> entries;
        int pos = 0;
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j, ++pos)
                if ((index >> (bits_ - 1 - pos)) & 1u) entries.emplace_back(i, j);
        return BottMatrix(n_, entries);
    }

private:
    int n_;
    int bits_;
    std::uint64_t next_;
};

inline MatrixEnumeration enumerate(int n, int bit_cap = default_enumeration_bit_cap) {
    return MatrixEnumeration(n, bit_cap);
}

/// One row per line, characters '0'/'1', no separators; trailing newline
/// optional on input, emitted on output.
inline std::string serialize(const BottMatrix& a) {
    std::string out;
    out.reserve(static_cast<std::size_t>(a.n()) * (static_cast<std::size_t>(a.n()) + 1));
    for (int i = 1; i <= a.n(); ++i) {
        for (int j = 1; j <= a.n(); ++j) out.push_back(a.entry(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

inline BottMatrix parse_matrix(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw parse_error("empty matrix", 1, 1);

    const int n = static_cast<int>(lines.size());
    if (n > max_dimension)
        throw parse_error("dimension " + std::to_string(n) + " exceeds cap " + std::to_string(max_dimension),
                          max_dimension + 1, 1);
    std::vector<std::pair<int, int>> entries;
    for (int i = 1; i <= n; ++i) {
        std::string_view line = lines[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(line.size()) != n)
            throw parse_error("row of length " + std::to_string(line.size()) + " in a " +
                              std::to_string(n) + "-row matrix", i, static_cast<int>(line.size()) + 1);
        for (int j = 1; j <= n; ++j) {
            char c = line[static_cast<std::size_t>(j - 1)];
            if (c != '0' && c != '1')
                throw parse_error(std::string("invalid character '") + c + "'", i, j);
            if (c == '1') {
                if (j <= i) throw parse_error("entry on or below the diagonal", i, j);
                entries.emplace_back(i, j);
            }
        }
    }
    return BottMatrix(n, entries);
}

}  // namespace bott
