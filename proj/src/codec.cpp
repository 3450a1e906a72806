#include "pellcode/codec.hpp"

#include <vector>

namespace pellcode {

MessageMatrix::MessageMatrix(IntMatrix body) : body_(std::move(body)) {
    if (!body_.square())
        throw std::domain_error("MessageMatrix: matrix must be square");
    for (int r = 0; r < body_.rows(); ++r)
        for (int c = 0; c < body_.cols(); ++c)
            if (sgn(body_.at(r, c)) <= 0)
                throw std::domain_error("MessageMatrix: entries must be positive");
}

int det_sign(int p, int n) {
    return neg_one_pow(static_cast<long>(n) * (p + 2));
}

CodePackage encode(const MessageMatrix& m, int p, int n) {
    if (p < 1) throw std::domain_error("encode: p must be >= 1");
    if (n < 1) throw std::domain_error("encode: n must be >= 1");
    if (m.order() != p + 1)
        throw std::domain_error("encode: message order must be p+1");
    IntMatrix e = mat_mul(m.body(), g_matrix(p, n));
    return CodePackage{std::move(e), p, n, determinant(m.body())};
}

IntMatrix decode(const CodePackage& pkg) {
    return mat_mul(pkg.e, unimodular_inverse(g_matrix(pkg.p, pkg.n)));
}

bool verify_det_relation(const CodePackage& pkg) {
    ArbInt expected = pkg.det_m;
    if (det_sign(pkg.p, pkg.n) < 0) expected = -expected;
    return determinant(pkg.e) == expected;
}

bool row_ratio_ok(const ArbInt& num, const ArbInt& den, int n) {
    if (is_zero(den)) throw std::domain_error("row_ratio_ok: zero denominator");
    return ratio_interval(n).contains(num, den);
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        std::size_t sp = line.find(' ', pos);
        if (sp == std::string_view::npos) {
            tokens.push_back(line.substr(pos));
            break;
        }
        tokens.push_back(line.substr(pos, sp - pos));
        pos = sp + 1;
    }
    return tokens;
}

// "key=value" with the expected key; value parsed as integer.
ArbInt parse_kv(std::string_view token, std::string_view key, int line_no) {
    std::size_t eq = token.find('=');
    if (eq == std::string_view::npos || token.substr(0, eq) != key)
        throw ParseError("line " + std::to_string(line_no) + ": expected " +
                         std::string(key) + "=<int>");
    auto value = parse_arbint(token.substr(eq + 1));
    if (!value)
        throw ParseError("line " + std::to_string(line_no) + ": bad integer for " +
                         std::string(key));
    return *value;
}

int parse_kv_int(std::string_view token, std::string_view key, int line_no) {
    ArbInt v = parse_kv(token, key, line_no);
    if (!fits_long(v))
        throw ParseError("line " + std::to_string(line_no) + ": " + std::string(key) +
                         " out of range");
    long l = to_long(v);
    if (l < -(1L << 30) || l > (1L << 30))
        throw ParseError("line " + std::to_string(line_no) + ": " + std::string(key) +
                         " out of range");
    return static_cast<int>(l);
}

}  // namespace

std::string write_pelle(const CodePackage& pkg) {
    std::string out = "PELLE 1\n";
    out += "p=" + std::to_string(pkg.p) + " n=" + std::to_string(pkg.n) +
           " det=" + str(pkg.det_m) + "\n";
    for (int r = 0; r < pkg.e.rows(); ++r) {
        for (int c = 0; c < pkg.e.cols(); ++c) {
            if (c > 0) out += ' ';
            out += str(pkg.e.at(r, c));
        }
        out += '\n';
    }
    return out;
}

CodePackage parse_pelle(std::string_view text) {
    auto lines = split_lines(text);  // a missing final newline is tolerated
    if (lines.size() < 2) throw ParseError("PELLE: truncated file");
    if (lines[0] != "PELLE 1") throw ParseError("line 1: expected \"PELLE 1\"");
    auto header = split_tokens(lines[1]);
    if (header.size() != 3) throw ParseError("line 2: expected p=, n=, det=");
    int p = parse_kv_int(header[0], "p", 2);
    int n = parse_kv_int(header[1], "n", 2);
    ArbInt det = parse_kv(header[2], "det", 2);
    if (p < 1) throw ParseError("line 2: p must be >= 1");
    if (n < 1) throw ParseError("line 2: n must be >= 1");
    const int order = p + 1;
    if (static_cast<int>(lines.size()) != 2 + order)
        throw ParseError("PELLE: expected " + std::to_string(order) +
                         " matrix rows, got " + std::to_string(lines.size() - 2));
    IntMatrix e(order, order);
    for (int r = 0; r < order; ++r) {
        auto tokens = split_tokens(lines[2 + r]);
        if (static_cast<int>(tokens.size()) != order)
            throw ParseError("line " + std::to_string(3 + r) + ": expected " +
                             std::to_string(order) + " integers");
        for (int c = 0; c < order; ++c) {
            auto v = parse_arbint(tokens[c]);
            if (!v)
                throw ParseError("line " + std::to_string(3 + r) +
                                 ": bad integer token \"" + std::string(tokens[c]) + "\"");
            e.at(r, c) = *v;
        }
    }
    return CodePackage{std::move(e), p, n, std::move(det)};
}

}  // namespace pellcode
