#include "pellcode/blocking.hpp"

#include <cctype>

#include "pellcode/sequences.hpp"

namespace pellcode {

namespace {

int alphabet_index(char symbol) {
    auto pos = kAlphabet.find(symbol);
    return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

}  // namespace

bool alphabet_contains(char symbol) { return alphabet_index(symbol) >= 0; }

int char_value(char symbol, const CharTable& table) {
    int idx = alphabet_index(symbol);
    if (idx < 0)
        throw std::domain_error(std::string("char_value: symbol '") + symbol +
                                "' is not in the alphabet");
    return (table.n + 28 - idx) % 29;
}

char value_char(int value, const CharTable& table) {
    if (value < 0 || value > 28)
        throw std::domain_error("value_char: value must be in [0,28]");
    return kAlphabet[(table.n + 28 - value) % 29];
}

Grid text_to_grid(std::string_view text) {
    std::string symbols;
    symbols.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == ' ') {
            symbols += '0';
            continue;
        }
        char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (!alphabet_contains(upper))
            throw std::domain_error(std::string("text_to_grid: unsupported character '") + c +
                                    "' at position " + std::to_string(i));
        symbols += upper;
    }
    if (symbols.empty()) throw std::domain_error("text_to_grid: empty text");
    int side = 2;
    while (static_cast<std::size_t>(side) * side < symbols.size()) side += 2;
    symbols.resize(static_cast<std::size_t>(side) * side, '0');
    return Grid{side, std::move(symbols)};
}

int choose_n(BlockMode mode, int block_count, int p) {
    if (mode == BlockMode::Pell) return block_count <= 3 ? 3 : block_count / 2;
    return p + 2;
}

namespace {

IntMatrix block_transform(const KPackage& k) {
    return k.mode == BlockMode::Pell ? p_power(k.n) : g_matrix(k.p, k.n);
}

int block_sign(const KPackage& k) {
    return k.mode == BlockMode::Pell ? neg_one_pow(k.n)
                                     : neg_one_pow(static_cast<long>(k.n) * (k.p + 2));
}

}  // namespace

KPackage block_encode(std::string_view text, BlockMode mode, int p) {
    if (p < 1) throw std::domain_error("block_encode: p must be >= 1");
    if (mode == BlockMode::GeneralizedPell && p != 1)
        throw UnsupportedError("block_encode: generalized mode is defined for p=1 only");
    Grid grid = text_to_grid(text);
    const int half = grid.side / 2;
    const int block_count = half * half;
    KPackage k;
    k.mode = mode;
    k.p = p;
    k.n = choose_n(mode, block_count, p);
    k.side = grid.side;
    CharTable table(k.n);
    for (int br = 0; br < half; ++br)
        for (int bc = 0; bc < half; ++bc) {
            auto cell = [&](int dr, int dc) {
                return ArbInt(
                    char_value(grid.cells[(2 * br + dr) * grid.side + 2 * bc + dc], table));
            };
            ArbInt b1 = cell(0, 0), b2 = cell(0, 1), b3 = cell(1, 0), b4 = cell(1, 1);
            if (is_zero(b3))
                throw std::domain_error(
                    "block_encode: block " + std::to_string(br * half + bc + 1) +
                    " has b3 = 0 and would be undecodable (the recovered entry's "
                    "coefficient is -b3*det)");
            k.records.push_back(BlockRecord{b1 * b4 - b2 * b3, std::move(b1), std::move(b3),
                                            std::move(b4)});
        }
    return k;
}

ArbInt solve_block_x(const BlockRecord& record, const IntMatrix& transform, int sign) {
    if (is_zero(record.b3))
        throw CorruptPackageError("solve_block_x: unrecoverable block (b3 = 0)");
    const ArbInt& t11 = transform.at(0, 0);
    const ArbInt& t12 = transform.at(0, 1);
    const ArbInt& t21 = transform.at(1, 0);
    const ArbInt& t22 = transform.at(1, 1);
    ArbInt e3 = t11 * record.b3 + t21 * record.b4;
    ArbInt e4 = t12 * record.b3 + t22 * record.b4;
    // sign*d = e4*(t11*b1 + t21*x) - e3*(t12*b1 + t22*x)
    ArbInt coeff = e4 * t21 - e3 * t22;  // equals -b3 * det(transform)
    ArbInt rhs = (sign < 0 ? -record.d : record.d) - record.b1 * (e4 * t11 - e3 * t12);
    if (is_zero(coeff) || !divides(coeff, rhs))
        throw CorruptPackageError("solve_block_x: inexact division");
    return exact_div(rhs, coeff);
}

std::string block_decode(const KPackage& k) {
    const int half = k.side / 2;
    if (static_cast<int>(k.records.size()) != half * half)
        throw std::domain_error("block_decode: record count does not match side");
    IntMatrix transform = block_transform(k);
    const int sign = block_sign(k);
    CharTable table(k.n);
    std::string cells(static_cast<std::size_t>(k.side) * k.side, '?');
    for (int i = 0; i < half * half; ++i) {
        const BlockRecord& rec = k.records[i];
        const std::string where = "block " + std::to_string(i + 1);
        if (is_zero(rec.b3))
            throw CorruptPackageError("block_decode: " + where + " unrecoverable (b3 = 0)");
        ArbInt x;
        try {
            x = solve_block_x(rec, transform, sign);
        } catch (const CorruptPackageError& e) {
            throw CorruptPackageError("block_decode: " + where + ": " + e.what());
        }
        // The recovery equation must agree with the determinant identity; a
        // mismatch means the record was corrupted in transit.
        ArbInt oracle_num = rec.b1 * rec.b4 - rec.d;
        if (!divides(rec.b3, oracle_num) || exact_div(oracle_num, rec.b3) != x)
            throw CorruptPackageError("block_decode: " + where +
                                      " fails the determinant cross-check");
        auto in_range = [](const ArbInt& v) { return sgn(v) >= 0 && v <= 28; };
        if (!in_range(x) || !in_range(rec.b1) || !in_range(rec.b3) || !in_range(rec.b4))
            throw CorruptPackageError("block_decode: " + where + " value outside [0,28]");
        const int br = i / half, bc = i % half;
        cells[(2 * br) * k.side + 2 * bc] = value_char(static_cast<int>(to_long(rec.b1)), table);
        cells[(2 * br) * k.side + 2 * bc + 1] = value_char(static_cast<int>(to_long(x)), table);
        cells[(2 * br + 1) * k.side + 2 * bc] =
            value_char(static_cast<int>(to_long(rec.b3)), table);
        cells[(2 * br + 1) * k.side + 2 * bc + 1] =
            value_char(static_cast<int>(to_long(rec.b4)), table);
    }
    return cells;
}

std::string render_text(std::string_view padded) {
    std::size_t end = padded.size();
    while (end > 0 && padded[end - 1] == '0') --end;
    std::string out;
    out.reserve(end);
    std::size_t i = 0;
    while (i < end) {
        if (padded[i] == '0') {
            while (i < end && padded[i] == '0') ++i;
            out += ' ';
        } else {
            out += padded[i++];
        }
    }
    return out;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) {
            parts.push_back(text.substr(pos));
            break;
        }
        parts.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

std::string_view kv_value(std::string_view token, std::string_view key, int line_no) {
    std::size_t eq = token.find('=');
    if (eq == std::string_view::npos || token.substr(0, eq) != key)
        throw ParseError("line " + std::to_string(line_no) + ": expected " + std::string(key) +
                         "=<value>");
    return token.substr(eq + 1);
}

int kv_int(std::string_view token, std::string_view key, int line_no) {
    auto v = parse_arbint(kv_value(token, key, line_no));
    if (!v || !fits_long(*v) || to_long(*v) > (1L << 30) || to_long(*v) < -(1L << 30))
        throw ParseError("line " + std::to_string(line_no) + ": bad integer for " +
                         std::string(key));
    return static_cast<int>(to_long(*v));
}

}  // namespace

std::string write_pellk(const KPackage& k) {
    std::string out = "PELLK 1\n";
    out += std::string("mode=") + (k.mode == BlockMode::Pell ? "pell" : "gpell");
    out += " p=" + std::to_string(k.p) + " n=" + std::to_string(k.n) +
           " side=" + std::to_string(k.side) + "\n";
    for (const BlockRecord& rec : k.records)
        out += str(rec.d) + " " + str(rec.b1) + " " + str(rec.b3) + " " + str(rec.b4) + "\n";
    return out;
}

KPackage parse_pellk(std::string_view text) {
    auto lines = split(text, '\n');  // a missing final newline is tolerated
    if (lines.size() < 2) throw ParseError("PELLK: truncated file");
    if (lines[0] != "PELLK 1") throw ParseError("line 1: expected \"PELLK 1\"");
    auto header = split(lines[1], ' ');
    if (header.size() != 4) throw ParseError("line 2: expected mode=, p=, n=, side=");
    std::string_view mode_str = kv_value(header[0], "mode", 2);
    KPackage k;
    if (mode_str == "pell")
        k.mode = BlockMode::Pell;
    else if (mode_str == "gpell")
        k.mode = BlockMode::GeneralizedPell;
    else
        throw ParseError("line 2: mode must be pell or gpell");
    k.p = kv_int(header[1], "p", 2);
    k.n = kv_int(header[2], "n", 2);
    k.side = kv_int(header[3], "side", 2);
    if (k.p != 1)
        throw ParseError("line 2: p must be 1" +
                         std::string(k.mode == BlockMode::Pell ? " in pell mode" : " (gpell)"));
    if (k.side < 2 || k.side % 2 != 0) throw ParseError("line 2: side must be even and >= 2");
    const int block_count = (k.side / 2) * (k.side / 2);
    if (k.n != choose_n(k.mode, block_count, k.p))
        throw ParseError("line 2: n is inconsistent with the mode rule (expected " +
                         std::to_string(choose_n(k.mode, block_count, k.p)) + ")");
    if (static_cast<int>(lines.size()) != 2 + block_count)
        throw ParseError("PELLK: expected " + std::to_string(block_count) +
                         " record lines, got " + std::to_string(lines.size() - 2));
    for (int i = 0; i < block_count; ++i) {
        auto tokens = split(lines[2 + i], ' ');
        if (tokens.size() != 4)
            throw ParseError("line " + std::to_string(3 + i) + ": expected 4 integers");
        ArbInt values[4];
        for (int j = 0; j < 4; ++j) {
            auto v = parse_arbint(tokens[j]);
            if (!v)
                throw ParseError("line " + std::to_string(3 + i) + ": bad integer token \"" +
                                 std::string(tokens[j]) + "\"");
            values[j] = std::move(*v);
        }
        k.records.push_back(BlockRecord{std::move(values[0]), std::move(values[1]),
                                        std::move(values[2]), std::move(values[3])});
    }
    return k;
}

}  // namespace pellcode
