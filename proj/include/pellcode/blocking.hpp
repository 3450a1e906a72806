#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pellcode/errors.hpp"
#include "pellcode/matrix.hpp"

namespace pellcode {

/// The fixed 29-symbol alphabet, in table order.
inline constexpr std::string_view kAlphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0:)";

/// mod-29 character table with offset n: value(symbol j) = (n + 28 - j) mod 29,
/// so the last character ')' starts at n.
struct CharTable {
    int n;

    explicit CharTable(int n_) : n(n_) {
        if (n < 1) throw std::domain_error("CharTable: n must be >= 1");
    }
};

bool alphabet_contains(char symbol);
int char_value(char symbol, const CharTable& table);
char value_char(int value, const CharTable& table);

/// Square symbol grid of even side, row-major.
struct Grid {
    int side;
    std::string cells;  // length side*side
};

/// Uppercases, maps spaces to '0', lays the text into the smallest even-side
/// square and pads the tail with '0'. Rejects unsupported characters, naming
/// the offender and its position.
Grid text_to_grid(std::string_view text);

enum class BlockMode { Pell, GeneralizedPell };

/// Pell rule: 3 if b <= 3 else floor(b/2). Generalized rule: p + 2.
int choose_n(BlockMode mode, int block_count, int p);

/// One transmitted block: determinant plus three entries; b2 is withheld
/// and recovered at decode time.
struct BlockRecord {
    ArbInt d;
    ArbInt b1;
    ArbInt b3;
    ArbInt b4;
};

struct KPackage {
    BlockMode mode;
    int p;
    int n;
    int side;
    std::vector<BlockRecord> records;  // (side/2)^2, left-to-right, top-to-bottom
};

/// Coding algorithm Steps 1-6. Rejects blocks with b3 = 0 (the decode
/// equation's x-coefficient is -b3*det(T), so such a package is undecodable).
KPackage block_encode(std::string_view text, BlockMode mode, int p);

/// Decoding algorithm Steps 1-9: returns the full padded symbol string of
/// length side^2. Throws CorruptPackageError naming the offending block on
/// inexact division or out-of-range values.
std::string block_decode(const KPackage& k);

/// The per-record recovery equation, exposed for testing:
/// sign*d = e4*(T11*b1 + T21*x) - e3*(T12*b1 + T22*x) with
/// e3 = T11*b3 + T21*b4, e4 = T12*b3 + T22*b4. Requires b3 != 0 and an
/// exact division.
ArbInt solve_block_x(const BlockRecord& record, const IntMatrix& transform, int sign);

/// Opt-in lossy rendering: interior '0' runs become single spaces, trailing
/// padding '0's are stripped.
std::string render_text(std::string_view padded);

/// PELLK text format:
///   PELLK 1
///   mode=<pell|gpell> p=<int> n=<int> side=<int>
///   one record per line: <d> <b1> <b3> <b4>
std::string write_pellk(const KPackage& k);
KPackage parse_pellk(std::string_view text);

}  // namespace pellcode
