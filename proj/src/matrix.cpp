#include "lcpqc/matrix.hpp"

#include <sstream>

#include "lcpqc/error.hpp"

namespace lcpqc {

GenMatrix GenMatrix::identity(Field field, std::size_t n) {
    GenMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void GenMatrix::append_row(std::span<const Elem> values) {
    if (values.size() != cols_) fail(ErrorKind::ShapeMismatch, "row length differs from column count");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

GenMatrix GenMatrix::transposed() const {
    GenMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    }
    return t;
}

RrefResult rank_rref(const GenMatrix& m) {
    const Field& f = m.field();
    GenMatrix a = m;
    RrefResult out{0, a, {}};
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(lead, j));
        }
        const Elem s = f.inv(a.at(lead, col));
        for (std::size_t j = col; j < a.cols(); ++j) a.at(lead, j) = f.mul(a.at(lead, j), s);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            const Elem c = a.at(r, col);
            if (r == lead || c == 0) continue;
            for (std::size_t j = col; j < a.cols(); ++j) a.at(r, j) = f.sub(a.at(r, j), f.mul(c, a.at(lead, j)));
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.rank = lead;
    out.rref = std::move(a);
    return out;
}

std::size_t rank(const GenMatrix& m) { return rank_rref(m).rank; }

GenMatrix stack(const GenMatrix& top, const GenMatrix& bottom) {
    if (top.cols() != bottom.cols()) fail(ErrorKind::ShapeMismatch, "stacked matrices differ in width");
    if (!(top.field() == bottom.field())) fail(ErrorKind::FieldMismatch, "stacked matrices over different fields");
    GenMatrix out = top;
    for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
    return out;
}

GenMatrix multiply(const GenMatrix& a, const GenMatrix& b) {
    if (a.cols() != b.rows()) fail(ErrorKind::ShapeMismatch, "inner dimensions differ");
    if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "matrices over different fields");
    const Field& f = a.field();
    GenMatrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem x = a.at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
        }
    }
    return out;
}

GenMatrix row_basis(const GenMatrix& m) {
    auto r = rank_rref(m);
    GenMatrix out(m.field(), 0, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) out.append_row(r.rref.row(i));
    return out;
}

bool same_row_space(const GenMatrix& a, const GenMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return row_basis(a) == row_basis(b);
}

GenMatrix dual_matrix(const GenMatrix& g) {
    const Field& f = g.field();
    auto r = rank_rref(g);
    if (r.rank != g.rows()) fail(ErrorKind::RankDeficient, "generator matrix must have full row rank");
    const std::size_t n = g.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    GenMatrix h(f, 0, n);
    std::vector<Elem> row(n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::fill(row.begin(), row.end(), 0);
        row[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) row[r.pivots[i]] = f.neg(r.rref.at(i, free));
        h.append_row(row);
    }
    return h;
}

std::string matrix_format(const GenMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            out += elem_format(m.field(), m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

GenMatrix matrix_parse(std::string_view text, const Field& field) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t width = 0;
    bool have_width = false;
    std::vector<Elem> data;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        std::vector<Elem> row;
        while (ls >> tok) row.push_back(elem_parse(tok, field).value());
        if (row.empty()) continue;
        if (!have_width) {
            width = row.size();
            have_width = true;
        } else if (row.size() != width) {
            fail(ErrorKind::ShapeMismatch, "line " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                                               " entries, expected " + std::to_string(width));
        }
        data.insert(data.end(), row.begin(), row.end());
        ++rows;
    }
    GenMatrix m(field, 0, width);
    for (std::size_t r = 0; r < rows; ++r) m.append_row(std::span<const Elem>(data).subspan(r * width, width));
    return m;
}

}  // namespace lcpqc
