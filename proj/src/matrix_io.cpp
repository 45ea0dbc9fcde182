#include "padiclab/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <sstream>

#include "padiclab/errors.hpp"

namespace padiclab {

namespace {

// Tracks position for error messages; treats any amount of spaces/tabs as one
// separator.
class TextCursor {
  public:
    explicit TextCursor(std::istream& in) : in_(in) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    // Next whitespace-delimited token on the current line; empty if the line
    // is exhausted.
    std::string token_on_line() {
        skip_blanks();
        std::string tok;
        int c;
        while ((c = in_.peek()) != EOF && c != '\n' && !std::isspace(c)) {
            tok.push_back(static_cast<char>(in_.get()));
            ++column_;
        }
        return tok;
    }

    // Consume end-of-line (or EOF).  Throws if non-blank content remains.
    void expect_line_end(const std::string& what) {
        skip_blanks();
        int c = in_.peek();
        if (c == EOF) return;
        if (c == '\n') {
            in_.get();
            ++line_;
            column_ = 1;
            return;
        }
        throw ParseError("unexpected extra content after " + what, line_, column_);
    }

  private:
    void skip_blanks() {
        int c;
        while ((c = in_.peek()) != EOF && c != '\n' && std::isspace(c)) {
            in_.get();
            ++column_;
        }
    }

    std::istream& in_;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::size_t parse_dimension(const std::string& tok, TextCursor& cur, const char* what) {
    if (!looks_like_integer(tok) || tok[0] == '-')
        throw ParseError(std::string("expected non-negative ") + what + ", got '" + tok + "'",
                         cur.line(), cur.column());
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        throw ParseError(std::string("dimension out of range: '") + tok + "'", cur.line(),
                         cur.column());
    }
}

}  // namespace

IntMatrix parse_matrix_text(std::istream& in) {
    TextCursor cur(in);
    std::string tok = cur.token_on_line();
    if (tok.empty()) throw ParseError("missing row count", cur.line(), cur.column());
    std::size_t rows = parse_dimension(tok, cur, "row count");
    tok = cur.token_on_line();
    if (tok.empty()) throw ParseError("missing column count", cur.line(), cur.column());
    std::size_t cols = parse_dimension(tok, cur, "column count");
    cur.expect_line_end("header");

    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            tok = cur.token_on_line();
            if (tok.empty())
                throw ParseError("row " + std::to_string(i + 1) + " has only " +
                                     std::to_string(j) + " of " + std::to_string(cols) +
                                     " entries",
                                 cur.line(), cur.column());
            if (!looks_like_integer(tok))
                throw ParseError("bad integer '" + tok + "'", cur.line(), cur.column());
            m.at(i, j) = mpz_class(tok);
        }
        cur.expect_line_end("row " + std::to_string(i + 1));
    }
    // Trailing blank lines are fine; trailing entries are not.
    for (;;) {
        std::string extra = cur.token_on_line();
        if (!extra.empty())
            throw ParseError("trailing content '" + extra + "' after matrix", cur.line(),
                             cur.column());
        std::size_t before = cur.line();
        cur.expect_line_end("matrix");
        if (cur.line() == before) break;  // hit EOF
    }
    return m;
}

IntMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix_text(in);
}

std::string serialize_matrix_text(const IntMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j).get_str();
        }
        out << '\n';
    }
    return out.str();
}

namespace {

const mpz_class kJsonSafeMax = mpz_class(1) << 53;

}  // namespace

IntMatrix parse_matrix_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("data"))
        throw ParseError("expected object with rows, cols, data", 1, 1);
    if (!doc["rows"].is_number_unsigned() || !doc["cols"].is_number_unsigned())
        throw ParseError("rows and cols must be non-negative integers", 1, 1);
    std::size_t rows = doc["rows"].get<std::size_t>();
    std::size_t cols = doc["cols"].get<std::size_t>();
    const auto& data = doc["data"];
    if (!data.is_array() || data.size() != rows * cols)
        throw ParseError("data must be an array of rows*cols entries", 1, 1);
    IntMatrix m(rows, cols);
    for (std::size_t k = 0; k < data.size(); ++k) {
        const auto& v = data[k];
        std::size_t i = cols ? k / cols : 0, j = cols ? k % cols : 0;
        if (v.is_number_integer() || v.is_number_unsigned()) {
            if (v.is_number_unsigned())
                m.at(i, j) = mpz_class(std::to_string(v.get<std::uint64_t>()));
            else
                m.at(i, j) = mpz_class(std::to_string(v.get<std::int64_t>()));
        } else if (v.is_string()) {
            std::string s = v.get<std::string>();
            if (!looks_like_integer(s))
                throw ParseError("data[" + std::to_string(k) + "]: bad integer string '" + s +
                                     "'",
                                 1, 1);
            m.at(i, j) = mpz_class(s);
        } else {
            throw ParseError("data[" + std::to_string(k) + "]: expected integer or string", 1,
                             1);
        }
    }
    return m;
}

std::string serialize_matrix_json(const IntMatrix& m) {
    nlohmann::json data = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpz_class& v = m.at(i, j);
            mpz_class mag = abs(v);
            if (mag > kJsonSafeMax)
                data.push_back(v.get_str());
            else
                data.push_back(v.get_si());
        }
    }
    nlohmann::json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["data"] = std::move(data);
    return doc.dump();
}

IntMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return parse_matrix_json(buf.str());
    return parse_matrix_text(buf.str());
}

void save_matrix_file(const IntMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'", 0, 0);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        out << serialize_matrix_json(m) << '\n';
    else
        out << serialize_matrix_text(m);
}

}  // namespace padiclab
