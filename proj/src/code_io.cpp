#include <cctype>
#include <fstream>
#include <sstream>

#include "mbp/code.hpp"

namespace mbp {
namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  return tokens;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const std::string& peek() const { return tokens_[pos_]; }
  std::string next(const char* what) {
    if (done()) throw ParseError(std::string("unexpected end of file, expected ") + what);
    return tokens_[pos_++];
  }
  std::size_t next_count(const char* what) {
    const std::string t = next(what);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      throw ParseError(std::string("expected integer for ") + what + ", got '" + t + "'");
    }
    if (used != t.size() || v < 0) throw ParseError(std::string("expected non-negative integer for ") + what + ", got '" + t + "'");
    return static_cast<std::size_t>(v);
  }
  // Reads `count` Pauli rows of length n; rows may be split across whitespace.
  std::vector<PauliString> dense_rows(std::size_t count, std::size_t n) {
    std::vector<PauliString> rows;
    std::string buf;
    while (rows.size() < count) {
      if (buf.size() < n) {
        const std::string t = next("Pauli row characters");
        for (char c : t) {
          if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
            throw ParseError("row " + std::to_string(rows.size() + 1) + ": invalid character '" + c + "'");
        }
        buf += t;
        continue;
      }
      rows.push_back(PauliString::parse(std::string_view(buf).substr(0, n)));
      buf.erase(0, n);
    }
    if (!buf.empty()) throw ParseError("row length does not match N = " + std::to_string(n));
    return rows;
  }

 private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

// Format:
//   M N
//   M rows of N characters over IXYZ        (dense)
//   or: SPARSE, then "m n W" triples        (1-based indices)
//   optional: LOGICALS K, then 2K dense rows X1 Z1 X2 Z2 ...
// '#' starts a comment.
Code parse_check_matrix(const std::string& text, const std::string& name) {
  TokenStream ts(tokenize(text));
  const std::size_t m = ts.next_count("M");
  const std::size_t n = ts.next_count("N");
  if (m == 0 || n == 0) throw ParseError("M and N must be positive");

  std::vector<PauliString> rows;
  if (!ts.done() && ts.peek() == "SPARSE") {
    ts.next("SPARSE");
    rows.assign(m, PauliString(n));
    while (!ts.done() && ts.peek() != "LOGICALS") {
      const std::size_t r = ts.next_count("row index");
      const std::size_t c = ts.next_count("column index");
      const std::string w = ts.next("Pauli");
      if (r < 1 || r > m || c < 1 || c > n)
        throw ParseError("sparse entry (" + std::to_string(r) + ", " + std::to_string(c) + ") outside " +
                         std::to_string(m) + " x " + std::to_string(n));
      if (w.size() != 1) throw ParseError("sparse entry Pauli must be one character, got '" + w + "'");
      rows[r - 1].set(c - 1, pauli_from_char(w[0]));
    }
  } else {
    rows = ts.dense_rows(m, n);
  }

  std::vector<LogicalPair> logicals;
  bool has_logicals = false;
  if (!ts.done()) {
    if (ts.next("LOGICALS") != "LOGICALS") throw ParseError("unexpected content after check matrix");
    has_logicals = true;
    const std::size_t k = ts.next_count("K");
    auto ops = ts.dense_rows(2 * k, n);
    for (std::size_t i = 0; i < k; ++i) logicals.push_back({ops[2 * i], ops[2 * i + 1]});
    if (!ts.done()) throw ParseError("unexpected content after logical operators");
  }

  CheckMatrix checks(std::move(rows));
  if (has_logicals) return Code(name, std::move(checks), std::move(logicals), std::nullopt);
  return Code(name, std::move(checks));
}

Code load_check_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open check-matrix file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_check_matrix(ss.str(), path);
}

std::string format_check_matrix(const Code& code, bool with_logicals) {
  std::ostringstream out;
  out << "# " << code.name() << "  [[" << code.n() << "," << code.k();
  if (code.distance()) out << "," << *code.distance();
  out << "]]\n";
  out << code.checks().num_rows() << " " << code.n() << "\n";
  for (const auto& r : code.checks().rows()) out << r.to_string() << "\n";
  if (with_logicals) {
    out << "LOGICALS " << code.logicals().size() << "\n";
    for (const auto& pair : code.logicals()) out << pair.x.to_string() << "\n" << pair.z.to_string() << "\n";
  }
  return out.str();
}

void save_check_matrix(const Code& code, const std::string& path, bool with_logicals) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write check-matrix file '" + path + "'");
  out << format_check_matrix(code, with_logicals);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace mbp
