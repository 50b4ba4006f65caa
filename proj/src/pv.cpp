#include "pvarea/pv.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace pvarea {

ParseError::ParseError(const std::string& what, std::uint32_t line, std::uint32_t col)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + what),
      line(line),
      col(col) {}

namespace {

bool ident_start(char c) {
  return c == '_' || std::isalpha(static_cast<unsigned char>(c));
}

bool ident_char(char c) {
  return c == '_' || std::isalnum(static_cast<unsigned char>(c));
}

class LineScanner {
 public:
  LineScanner(std::string_view line, std::uint32_t lineno)
      : line_(line), lineno_(lineno) {}

  void skip_ws() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t'))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= line_.size();
  }

  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }

  std::uint32_t col() const { return static_cast<std::uint32_t>(pos_ + 1); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, lineno_, col());
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    if (!ident_start(peek())) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < line_.size() && ident_char(line_[pos_])) ++pos_;
    return std::string(line_.substr(start, pos_ - start));
  }

  std::uint32_t number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < line_.size() &&
           std::isdigit(static_cast<unsigned char>(line_[pos_])))
      ++pos_;
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(line_.data() + start, line_.data() + pos_, value);
    if (ec != std::errc() || ptr != line_.data() + pos_ || start == pos_) {
      pos_ = start;
      fail("expected integer");
    }
    return value;
  }

 private:
  std::string_view line_;
  std::size_t pos_ = 0;
  std::uint32_t lineno_;
};

}  // namespace

Program parse_program(std::string_view text) {
  Program prog;
  std::map<std::string, std::uint32_t, std::less<>> sem_index;
  std::map<std::string, std::uint32_t, std::less<>> proc_index;

  std::uint32_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t eol = text.find('\n', start);
    std::string_view line = text.substr(
        start, eol == std::string_view::npos ? text.size() - start : eol - start);
    ++lineno;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    LineScanner sc(line, lineno);
    if (!sc.at_end()) {
      std::uint32_t kw_col = sc.col();
      std::string kw = sc.ident();
      if (kw == "sem") {
        std::uint32_t name_col = (sc.skip_ws(), sc.col());
        std::string name = sc.ident();
        if (sem_index.contains(name))
          throw ParseError("duplicate semaphore '" + name + "'", lineno, name_col);
        std::uint32_t arity_col = (sc.skip_ws(), sc.col());
        std::uint32_t arity = sc.number();
        if (arity < 2)
          throw ParseError("semaphore arity must be at least 2", lineno, arity_col);
        if (!sc.at_end()) sc.fail("unexpected trailing input");
        sem_index.emplace(name, static_cast<std::uint32_t>(prog.sems.size()));
        prog.sems.push_back({std::move(name), arity});
      } else if (kw == "proc") {
        std::uint32_t name_col = (sc.skip_ws(), sc.col());
        std::string name = sc.ident();
        if (proc_index.contains(name))
          throw ParseError("duplicate process '" + name + "'", lineno, name_col);
        sc.skip_ws();
        sc.expect('=');
        Process proc{std::move(name), {}};
        while (true) {
          sc.skip_ws();
          char op = sc.peek();
          if (op != 'P' && op != 'V') sc.fail("expected 'P' or 'V'");
          sc.expect(op);
          sc.expect('(');
          std::uint32_t sem_col = sc.col();
          std::string sem = sc.ident();
          auto it = sem_index.find(sem);
          if (it == sem_index.end())
            throw ParseError("undeclared semaphore '" + sem + "'", lineno, sem_col);
          sc.expect(')');
          proc.body.push_back({op == 'P' ? Op::P : Op::V, it->second});
          sc.skip_ws();
          if (sc.peek() != '.') break;
          sc.expect('.');
        }
        if (!sc.at_end()) sc.fail("unexpected trailing input");
        proc_index.emplace(proc.name, static_cast<std::uint32_t>(prog.procs.size()));
        prog.procs.push_back(std::move(proc));
      } else {
        throw ParseError("expected 'sem' or 'proc'", lineno, kw_col);
      }
    }

    if (eol == std::string_view::npos) break;
    start = eol + 1;
  }
  return prog;
}

std::string render_program(const Program& prog) {
  std::string out;
  for (const SemDecl& s : prog.sems)
    out += "sem " + s.name + " " + std::to_string(s.arity) + "\n";
  for (const Process& p : prog.procs) {
    out += "proc " + p.name + " =";
    for (std::size_t i = 0; i < p.body.size(); ++i) {
      const Instruction& ins = p.body[i];
      out += i == 0 ? " " : ".";
      out += ins.op == Op::P ? 'P' : 'V';
      out += "(" + prog.sems[ins.sem].name + ")";
    }
    out += "\n";
  }
  return out;
}

Program gen_sigma(std::span<const std::uint32_t> group_sizes, bool strict) {
  const std::size_t k = group_sizes.size();
  if (k == 0) throw std::invalid_argument("sigma needs at least one group");
  for (std::uint32_t n : group_sizes) {
    if (n == 0) throw std::invalid_argument("sigma group sizes must be positive");
  }
  if (strict && k == 1)
    throw std::invalid_argument("strict sigma needs at least two groups");

  Program prog;
  for (std::size_t i = 0; i < k; ++i)
    prog.sems.push_back({"a" + std::to_string(i + 1), 2});
  const std::uint32_t b = static_cast<std::uint32_t>(k);
  prog.sems.push_back({"b", static_cast<std::uint32_t>(strict ? k : k + 1)});

  std::uint32_t emitted = 1;
  for (std::uint32_t round = 0;; ++round) {
    bool any = false;
    for (std::uint32_t i = 0; i < k; ++i) {
      if (round >= group_sizes[i]) continue;
      any = true;
      prog.procs.push_back({"p" + std::to_string(emitted++),
                            {{Op::P, i}, {Op::P, b}, {Op::V, b}, {Op::V, i}}});
    }
    if (!any) break;
  }
  return prog;
}

Program gen_philosophers(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("philosophers needs at least 2 seats");
  Program prog;
  for (std::uint32_t i = 1; i <= n; ++i)
    prog.sems.push_back({"f" + std::to_string(i), 2});
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::uint32_t left = i - 1;
    std::uint32_t right = i % n;
    prog.procs.push_back({"p" + std::to_string(i),
                          {{Op::P, left},
                           {Op::P, right},
                           {Op::V, right},
                           {Op::V, left}}});
  }
  return prog;
}

Program make_benchmark(std::string_view spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("generator spec must look like family:args");
  std::string_view family = spec.substr(0, colon);
  std::string_view args = spec.substr(colon + 1);

  std::vector<std::uint32_t> values;
  std::size_t pos = 0;
  while (pos <= args.size()) {
    std::size_t comma = args.find(',', pos);
    std::string_view part = args.substr(
        pos, comma == std::string_view::npos ? args.size() - pos : comma - pos);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw std::invalid_argument("bad generator argument '" + std::string(part) + "'");
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }

  if (family == "sigma") return gen_sigma(values, false);
  if (family == "sigma-prime") return gen_sigma(values, true);
  if (family == "philosophers") {
    if (values.size() != 1)
      throw std::invalid_argument("philosophers takes exactly one argument");
    return gen_philosophers(values[0]);
  }
  throw std::invalid_argument("unknown generator family '" + std::string(family) + "'");
}

}  // namespace pvarea
