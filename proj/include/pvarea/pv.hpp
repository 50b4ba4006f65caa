#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pvarea {

enum class Op : std::uint8_t { P, V };

// sem is an index into Program::sems.
struct Instruction {
  Op op;
  std::uint32_t sem;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct SemDecl {
  std::string name;
  std::uint32_t arity;  // >= 2; arity 2 is a mutex

  friend bool operator==(const SemDecl&, const SemDecl&) = default;
};

struct Process {
  std::string name;
  std::vector<Instruction> body;  // position n (1-based) is body[n-1]

  friend bool operator==(const Process&, const Process&) = default;
};

// Process order assigns model coordinates: coordinate i belongs to procs[i].
struct Program {
  std::vector<SemDecl> sems;
  std::vector<Process> procs;

  friend bool operator==(const Program&, const Program&) = default;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::uint32_t line, std::uint32_t col);

  std::uint32_t line;  // 1-based
  std::uint32_t col;   // 1-based
};

// File format, line-oriented:
//   # comment (also after other content)
//   sem <ident> <arity>
//   proc <ident> = <instr>(.<instr>)*     with <instr> = P(<ident>) | V(<ident>)
// Identifiers match [A-Za-z_][A-Za-z0-9_]*. Errors: syntax, undeclared
// semaphore, arity < 2, duplicate semaphore or process name.
Program parse_program(std::string_view text);

// Emits the file format back; parse_program(render_program(p)) == p.
std::string render_program(const Program& prog);

// k groups: mutexes a1..ak (arity 2) plus semaphore b of arity k+1, or k when
// strict. Group i contributes group_sizes[i-1] copies of
// P(ai).P(b).V(b).V(ai), emitted round-robin across groups. Throws
// std::invalid_argument on empty groups, a zero size, or strict with k = 1.
Program gen_sigma(std::span<const std::uint32_t> group_sizes, bool strict = false);

// Forks f1..fn (mutexes); process i is P(fi).P(fj).V(fj).V(fi) with
// j = (i mod n) + 1. Throws std::invalid_argument when n < 2.
Program gen_philosophers(std::uint32_t n);

// Generator spec "<family>:<comma-separated ints>" with families sigma,
// sigma-prime, philosophers. Throws std::invalid_argument on bad specs.
Program make_benchmark(std::string_view spec);

}  // namespace pvarea
