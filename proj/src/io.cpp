#include "qp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qp {
namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

// Whitespace-separated tokens with 1-based positions.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next(const char* expected) {
    skip_space();
    if (pos_ >= text_.size())
      throw ParseError(std::string("unexpected end of input, expected ") + expected, line_, column_);
    const int line = line_, column = column_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) advance();
    return {text_.substr(start, pos_ - start), line, column};
  }

  void expect_keyword(const char* keyword) {
    Token tok = next(keyword);
    if (tok.text != keyword)
      throw ParseError(std::string("expected '") + keyword + "', got '" + std::string(tok.text) + "'",
                       tok.line, tok.column);
  }

  int expect_int(const char* what, long long lo, long long hi) {
    Token tok = next(what);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
      throw ParseError(std::string("expected integer ") + what + ", got '" + std::string(tok.text) + "'",
                       tok.line, tok.column);
    if (value < lo || value > hi)
      throw ParseError(std::string(what) + " " + std::to_string(value) + " out of range [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]",
                       tok.line, tok.column);
    return static_cast<int>(value);
  }

  void expect_end() {
    skip_space();
    if (pos_ < text_.size()) {
      Token tok = next("end of input");
      throw ParseError("trailing content '" + std::string(tok.text) + "'", tok.line, tok.column);
    }
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

void open_document(Lexer& lex, const char* format) {
  lex.expect_keyword(format);
  Token version = lex.next("format version");
  if (version.text != "1")
    throw ParseError("unsupported " + std::string(format) + " version '" + std::string(version.text) + "'",
                     version.line, version.column);
}

std::vector<int> read_values(Lexer& lex, std::size_t count, int m) {
  std::vector<int> values;
  values.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    values.push_back(lex.expect_int("value", 0, m - 1));
  lex.expect_end();
  return values;
}

void append_values(std::string& out, const std::vector<int>& values, std::size_t per_line) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    out += std::to_string(values[k]);
    out += (k + 1) % per_line == 0 || k + 1 == values.size() ? '\n' : ' ';
  }
}

}  // namespace

ParseError::ParseError(const std::string& reason, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + reason),
      line_(line),
      column_(column) {}

std::string serialize(const DiscreteFunction& f) {
  std::string out = "qpf 1\nchain " + std::to_string(f.chain().size()) + " arity " +
                    std::to_string(f.arity()) + "\n";
  append_values(out, f.table(), static_cast<std::size_t>(f.chain().size()));
  return out;
}

DiscreteFunction parse_function(std::string_view text) {
  Lexer lex(text);
  open_document(lex, "qpf");
  lex.expect_keyword("chain");
  const int m = lex.expect_int("chain size", 2, 1024);
  lex.expect_keyword("arity");
  const int n = lex.expect_int("arity", 1, 31);
  Chain chain(m);
  return DiscreteFunction(chain, n, read_values(lex, table_size_for(chain, n), m));
}

std::string serialize(const SetFunction& alpha) {
  std::string out = "qsf 1\narity " + std::to_string(alpha.arity()) + " chain " +
                    std::to_string(alpha.chain().size()) + "\n";
  append_values(out, alpha.values(), alpha.values().size());
  return out;
}

SetFunction parse_set_function(std::string_view text) {
  Lexer lex(text);
  open_document(lex, "qsf");
  lex.expect_keyword("arity");
  const int n = lex.expect_int("arity", 1, 20);
  lex.expect_keyword("chain");
  const int m = lex.expect_int("chain size", 2, 1024);
  return SetFunction(Chain(m), n, read_values(lex, std::size_t{1} << n, m));
}

std::string serialize(const UnaryMap& phi) {
  std::string out = "qum 1\nchain " + std::to_string(phi.chain().size()) + "\n";
  append_values(out, phi.values(), phi.values().size());
  return out;
}

UnaryMap parse_unary_map(std::string_view text) {
  Lexer lex(text);
  open_document(lex, "qum");
  lex.expect_keyword("chain");
  const int m = lex.expect_int("chain size", 2, 1024);
  return UnaryMap(Chain(m), read_values(lex, static_cast<std::size_t>(m), m));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw std::runtime_error("cannot read " + path);
  return buf.str();
}

DiscreteFunction load_function(const std::string& path) {
  return parse_function(read_file(path));
}

SetFunction load_set_function(const std::string& path) {
  return parse_set_function(read_file(path));
}

UnaryMap load_unary_map(const std::string& path) {
  return parse_unary_map(read_file(path));
}

}  // namespace qp
