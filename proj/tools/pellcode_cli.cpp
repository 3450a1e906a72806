#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pellcode/blocking.hpp"
#include "pellcode/channel.hpp"
#include "pellcode/codec.hpp"
#include "pellcode/correction.hpp"

namespace {

using namespace pellcode;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadFile = 2;
constexpr int kExitValidation = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

// Inline matrix syntax: rows separated by ';', entries by ','. "18,1;4,22"
IntMatrix parse_inline_matrix(const std::string& text) {
    std::vector<std::vector<ArbInt>> rows;
    std::stringstream ss(text);
    std::string row_text;
    while (std::getline(ss, row_text, ';')) {
        std::vector<ArbInt> row;
        std::stringstream rs(row_text);
        std::string tok;
        while (std::getline(rs, tok, ',')) {
            auto v = parse_arbint(tok);
            if (!v) throw ParseError("bad matrix entry: \"" + tok + "\"");
            row.push_back(*v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix");
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw ParseError("ragged matrix rows");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    }
    return m;
}

// Matrix file: one row per line, space-separated integers.
IntMatrix parse_matrix_file(const std::string& text) {
    std::vector<std::vector<ArbInt>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::vector<ArbInt> row;
        std::stringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            auto v = parse_arbint(tok);
            if (!v) throw ParseError("bad matrix token: \"" + tok + "\"");
            row.push_back(*v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix file");
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw ParseError("ragged matrix rows");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    }
    return m;
}

std::string matrix_rows(const IntMatrix& m) {
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ' ';
            out += str(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Pell and generalized Pell (p,i) matrix coding: exact encode/decode,\n"
                 "determinant error detection/correction, blocking algorithms and a\n"
                 "deterministic error-injection simulator."};
    app.require_subcommand(1);

    // seq
    auto* seq = app.add_subcommand("seq", "print generalized Pell (p,i)-numbers");
    int seq_p = 1, seq_i = 1, seq_from = 1, seq_to = 10;
    seq->add_option("--p", seq_p, "recurrence order parameter")->check(CLI::PositiveNumber);
    seq->add_option("--i", seq_i, "initial-term family index")->check(CLI::NonNegativeNumber);
    seq->add_option("--from", seq_from, "first index (1-based)")->check(CLI::PositiveNumber);
    seq->add_option("--to", seq_to, "last index")->check(CLI::PositiveNumber);

    // matrix
    auto* matrix = app.add_subcommand("matrix", "print P^n, A or G_n as an integer grid");
    std::string matrix_kind;
    int matrix_p = 1, matrix_n = 1;
    matrix->add_option("--kind", matrix_kind, "p (P^n) | a (A) | g (G_n)")
        ->required()
        ->check(CLI::IsMember({"p", "a", "g"}));
    matrix->add_option("--p", matrix_p, "order parameter")->check(CLI::PositiveNumber);
    matrix->add_option("--n", matrix_n, "power")->check(CLI::PositiveNumber);

    // encode
    auto* enc = app.add_subcommand("encode", "encode a message matrix into a PELLE package");
    int enc_p = 1, enc_n = 3;
    std::string enc_matrix, enc_input, enc_out;
    enc->add_option("--p", enc_p, "order parameter")->check(CLI::PositiveNumber);
    enc->add_option("--n", enc_n, "coding power n")->check(CLI::PositiveNumber);
    auto* enc_m = enc->add_option("--matrix", enc_matrix, "inline matrix \"a,b;c,d\"");
    auto* enc_f = enc->add_option("--input", enc_input, "matrix file (rows of integers)");
    enc_m->excludes(enc_f);
    enc->add_option("--out", enc_out, "output file (default stdout)");

    // decode
    auto* dec = app.add_subcommand("decode", "decode a PELLE package to its message matrix");
    std::string dec_input;
    dec->add_option("file", dec_input, "PELLE file");
    dec->add_option("--input", dec_input, "PELLE file");

    // correct
    auto* cor = app.add_subcommand("correct", "detect and correct errors in a PELLE package");
    std::string cor_input;
    cor->add_option("file", cor_input, "PELLE file");
    cor->add_option("--input", cor_input, "PELLE file");

    // block
    auto* block = app.add_subcommand("block", "text blocking algorithms (PELLK packages)");
    block->require_subcommand(1);
    auto* benc = block->add_subcommand("encode", "encode text into a PELLK package");
    std::string benc_mode = "pell", benc_text, benc_out;
    int benc_p = 1;
    benc->add_option("--mode", benc_mode, "pell | gpell")
        ->check(CLI::IsMember({"pell", "gpell"}));
    benc->add_option("--p", benc_p, "order parameter (1)")->check(CLI::PositiveNumber);
    benc->add_option("--text", benc_text, "message text")->required();
    benc->add_option("--out", benc_out, "output file (default stdout)");
    auto* bdec = block->add_subcommand("decode", "decode a PELLK package back to text");
    std::string bdec_input;
    bool bdec_render = false;
    bdec->add_option("file", bdec_input, "PELLK file");
    bdec->add_option("--input", bdec_input, "PELLK file");
    bdec->add_flag("--render-spaces", bdec_render,
                   "replace interior '0' runs with spaces and strip trailing padding (lossy)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run the deterministic error-injection simulator");
    ChannelConfig cfg;
    int sim_errors = 0;
    bool sim_kv = false;
    sim->add_option("--trials", cfg.trials, "number of trials")->check(CLI::PositiveNumber);
    sim->add_option("--errors", sim_errors, "force error-pattern size 1..4 (0 = mixed)")
        ->check(CLI::Range(0, 4));
    sim->add_option("--magnitude", cfg.magnitude, "max |additive corruption|")
        ->check(CLI::PositiveNumber);
    sim->add_option("--seed", cfg.seed, "64-bit seed");
    sim->add_option("--n-min", cfg.n_min, "smallest n")->check(CLI::PositiveNumber);
    sim->add_option("--n-max", cfg.n_max, "largest n")->check(CLI::PositiveNumber);
    sim->add_option("--entry-min", cfg.entry_min, "smallest message entry")
        ->check(CLI::PositiveNumber);
    sim->add_option("--entry-max", cfg.entry_max, "largest message entry")
        ->check(CLI::PositiveNumber);
    sim->add_flag("--kv", sim_kv, "also print the machine-readable key=value block");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (*seq) {
        if (seq_from > seq_to) {
            std::cerr << "--from must not exceed --to\n";
            return kExitUsage;
        }
        SequenceParams params(seq_p, seq_i);
        for (int k = seq_from; k <= seq_to; ++k)
            std::cout << k << " " << gen_pell(params, k) << "\n";
        return kExitOk;
    }
    if (*matrix) {
        IntMatrix m = matrix_kind == "p"   ? p_power(matrix_n)
                      : matrix_kind == "a" ? a_matrix(matrix_p)
                                           : g_matrix(matrix_p, matrix_n);
        std::cout << matrix_rows(m);
        return kExitOk;
    }
    if (*enc) {
        if (enc_matrix.empty() && enc_input.empty()) {
            std::cerr << "encode: need --matrix or --input\n";
            return kExitUsage;
        }
        IntMatrix body = enc_matrix.empty() ? parse_matrix_file(read_file(enc_input))
                                            : parse_inline_matrix(enc_matrix);
        CodePackage pkg = encode(MessageMatrix(std::move(body)), enc_p, enc_n);
        write_output(enc_out, write_pelle(pkg));
        return kExitOk;
    }
    if (*dec) {
        if (dec_input.empty()) {
            std::cerr << "decode: missing PELLE file\n";
            return kExitUsage;
        }
        CodePackage pkg = parse_pelle(read_file(dec_input));
        std::cout << matrix_rows(decode(pkg));
        return kExitOk;
    }
    if (*cor) {
        if (cor_input.empty()) {
            std::cerr << "correct: missing PELLE file\n";
            return kExitUsage;
        }
        CodePackage pkg = parse_pelle(read_file(cor_input));
        CorrectionResult res = correct(pkg);
        std::cout << "status: " << to_string(res.status) << "\n";
        if (res.pattern) std::cout << "pattern: " << res.pattern->to_string() << "\n";
        if (res.message) std::cout << "message: " << res.message->to_string() << "\n";
        std::cout << "candidates: " << res.candidates.size() << "\n";
        for (const Candidate& c : res.candidates) {
            std::cout << "  " << (c.pattern ? c.pattern->to_string() : "{checking-element}")
                      << " message [" << c.message.to_string() << "]";
            if (c.fixed_det_m) std::cout << " det=" << str(*c.fixed_det_m);
            std::cout << "\n";
        }
        for (const std::string& note : res.notes) std::cerr << "note: " << note << "\n";
        bool ok = res.status == CorrectionStatus::Clean ||
                  res.status == CorrectionStatus::Corrected;
        return ok ? kExitOk : kExitValidation;
    }
    if (*benc) {
        BlockMode mode = benc_mode == "pell" ? BlockMode::Pell : BlockMode::GeneralizedPell;
        KPackage k = block_encode(benc_text, mode, benc_p);
        write_output(benc_out, write_pellk(k));
        return kExitOk;
    }
    if (*bdec) {
        if (bdec_input.empty()) {
            std::cerr << "block decode: missing PELLK file\n";
            return kExitUsage;
        }
        KPackage k = parse_pellk(read_file(bdec_input));
        std::string padded = block_decode(k);
        std::cout << (bdec_render ? render_text(padded) : padded) << "\n";
        return kExitOk;
    }
    if (*sim) {
        if (sim_errors > 0) cfg.pattern_weights = {{sim_errors, 1}};
        SimReport report = simulate(cfg);
        std::cout << render_table(report);
        if (sim_kv) std::cout << render_kv(report);
        std::cerr << "elapsed: " << report.wall_ms << " ms\n";
        return kExitOk;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pellcode::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFile;
    } catch (const pellcode::CorruptPackageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const pellcode::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFile;
    }
}
