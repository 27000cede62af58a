#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "polyeval/bigint.hpp"
#include "polyeval/powers.hpp"
#include "polyeval/ring.hpp"
#include "polyeval/tree.hpp"

namespace polyeval {

/// Flat, immutable compilation of an evaluation tree.
///
/// Records are laid out in topological order with the root last. Each record
/// carries its coefficient (a scalar, or a nested program for multivariate
/// coefficients), the register it reads (`lazy_slot`, read only when the node
/// has children), an optional index into the deduplicated exponent list
/// (absent when the partial degree is 0), and the register of its parent
/// (absent for the root).
///
/// Exponent sets are unioned per variable across all nested programs and
/// stored once on the root program, so one power table per variable serves
/// the whole evaluation.
struct CompiledProgram {
  struct Record {
    BigInt coeff;
    std::unique_ptr<CompiledProgram> sub;  // nested coefficient program
    std::optional<std::uint32_t> power_slot;
    std::uint32_t lazy_slot = 0;
    std::optional<std::uint32_t> parent_slot;
    bool reads_register = false;
  };

  std::vector<Record> records;
  std::uint32_t register_count = 1;  // 1 + max lazy height of this program
  std::size_t variable = 0;

  /// Record index of each root child, ascending; each child's subtree is the
  /// contiguous record range ending at that index. Used to partition
  /// parallel evaluation.
  std::vector<std::uint32_t> root_child_ends;

  // Root program only.
  std::size_t variable_count = 0;
  std::vector<ExponentSet> exponent_sets;  // indexed by variable
};

/// Compiles an annotated tree (lazy heights computed) into a flat program.
CompiledProgram compile(const EvaluationTree& tree);

/// Evaluation session for one compiled program over one ring domain.
///
/// Coefficients are injected into the domain once, at construction. Power
/// tables are built per evaluation point and cached, keyed by the point, so
/// repeated evaluation at the same point only pays for the walk itself.
///
/// The session is not thread-safe (it owns the table cache); the underlying
/// program and tables are immutable during a walk, which is what
/// evaluate_parallel relies on. Distinct sessions over the same program may
/// run concurrently.
template <RingDomain D>
class Evaluator {
 public:
  using Value = typename D::Value;

  Evaluator(D domain, const CompiledProgram& program)
      : domain_(std::move(domain)), program_(&program) {
    bound_ = bind(program);
  }

  /// Runs the coefficient walk over all records in topological order:
  ///   v <- (m[lazy_slot] + coeff) * x^d      (register read skipped for
  ///                                           childless records, the
  ///                                           multiplication when d = 0)
  ///   m[lazy_slot] <- 0
  ///   m[parent_slot] <- m[parent_slot] + v   (the root returns v instead)
  Value evaluate(std::span<const Value> point) {
    ensure_tables(point);
    std::vector<Value> registers(bound_.register_count, domain_.zero());
    return run_range(bound_, 0, bound_.records.size() - 1, point, registers,
                     true);
  }

  /// Same result as evaluate(); the root's child subtrees (contiguous record
  /// ranges) are partitioned over at most `workers` threads, each walking its
  /// ranges with a private register file, and the per-child values are summed
  /// in the fixed topological child order. Bit-identical to the sequential
  /// walk in every domain, and deterministic for any worker count.
  Value evaluate_parallel(std::span<const Value> point, unsigned workers) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    const auto& children = bound_.root_child_ends;
    if (workers == 1 || children.size() <= 1) return evaluate(point);
    ensure_tables(point);

    const std::size_t groups =
        std::min<std::size_t>(workers, children.size());
    std::vector<Value> child_values(children.size(), domain_.zero());
    std::vector<std::exception_ptr> errors(groups);
    std::vector<std::thread> threads;
    threads.reserve(groups);
    for (std::size_t g = 0; g < groups; ++g) {
      threads.emplace_back([&, g]() {
        try {
          std::vector<Value> registers(bound_.register_count, domain_.zero());
          // Child c covers records (end of c-1, end of c]; stripe children
          // over groups round-robin to balance uneven subtree sizes.
          for (std::size_t c = g; c < children.size(); c += groups) {
            const std::size_t first = c == 0 ? 0 : children[c - 1] + 1;
            child_values[c] = run_range(bound_, first, children[c], point,
                                        registers, false);
          }
        } catch (...) {
          errors[g] = std::current_exception();
        }
      });
    }
    for (auto& thread : threads) thread.join();
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }

    Value acc = domain_.zero();
    for (const Value& v : child_values) acc = domain_.add(acc, v);
    // Apply the root record on the combined child sum.
    const auto& root = bound_.records.back();
    Value v = root.sub ? run_nested(*root.sub, point) : root.coeff;
    v = domain_.add(acc, v);
    if (root.power_slot) {
      v = domain_.mul(v, tables_[bound_.variable].entries[*root.power_slot]);
    }
    return v;
  }

  /// When enabled, every walk verifies that the register file is all zeros
  /// after the root record; a nonzero register means a value was produced
  /// and never consumed.
  void enable_register_check(bool on) noexcept { check_registers_ = on; }

 private:
  struct BoundProgram {
    struct Record {
      Value coeff;
      std::unique_ptr<BoundProgram> sub;
      std::optional<std::uint32_t> power_slot;
      std::uint32_t lazy_slot = 0;
      std::optional<std::uint32_t> parent_slot;
      bool reads_register = false;
    };
    std::vector<Record> records;
    std::uint32_t register_count = 1;
    std::size_t variable = 0;
    std::vector<std::uint32_t> root_child_ends;
  };

  BoundProgram bind(const CompiledProgram& program) {
    BoundProgram out;
    out.register_count = program.register_count;
    out.variable = program.variable;
    out.root_child_ends = program.root_child_ends;
    out.records.reserve(program.records.size());
    for (const auto& record : program.records) {
      typename BoundProgram::Record bound;
      bound.coeff = record.sub ? domain_.zero()
                               : domain_.from_integer(record.coeff);
      if (record.sub) {
        bound.sub = std::make_unique<BoundProgram>(bind(*record.sub));
      }
      bound.power_slot = record.power_slot;
      bound.lazy_slot = record.lazy_slot;
      bound.parent_slot = record.parent_slot;
      bound.reads_register = record.reads_register;
      out.records.push_back(std::move(bound));
    }
    return out;
  }

  void ensure_tables(std::span<const Value> point) {
    if (point.size() != program_->variable_count) {
      throw std::invalid_argument("evaluation point arity mismatch");
    }
    if (has_cached_point_ &&
        std::equal(point.begin(), point.end(), cached_point_.begin(),
                   cached_point_.end())) {
      return;
    }
    tables_.clear();
    tables_.reserve(program_->exponent_sets.size());
    for (std::size_t v = 0; v < program_->exponent_sets.size(); ++v) {
      const ExponentSet& set = program_->exponent_sets[v];
      if (set.empty()) {
        tables_.emplace_back();
        continue;
      }
      tables_.push_back(build_power_table(domain_, point[v], set));
    }
    cached_point_.assign(point.begin(), point.end());
    has_cached_point_ = true;
  }

  Value run_nested(const BoundProgram& program,
                   std::span<const Value> point) {
    std::vector<Value> registers(program.register_count, domain_.zero());
    return run_range(program, 0, program.records.size() - 1, point, registers,
                     false);
  }

  // Walks records[first..last]; the record at `last` yields the result
  // instead of accumulating into its parent. `check_clean` gates the
  // register hygiene check (only meaningful for a full program walk).
  Value run_range(const BoundProgram& program, std::size_t first,
                  std::size_t last, std::span<const Value> point,
                  std::vector<Value>& registers, bool check_clean) {
    Value result = domain_.zero();
    for (std::size_t i = first; i <= last; ++i) {
      const auto& record = program.records[i];
      Value v = record.sub ? run_nested(*record.sub, point) : record.coeff;
      if (record.reads_register) {
        v = domain_.add(registers[record.lazy_slot], v);
        registers[record.lazy_slot] = domain_.zero();
      }
      if (record.power_slot) {
        v = domain_.mul(v,
                        tables_[program.variable].entries[*record.power_slot]);
      }
      if (i == last) {
        result = std::move(v);
        break;
      }
      Value& slot = registers[*record.parent_slot];
      slot = domain_.add(slot, v);
    }
    if (check_registers_ && check_clean) {
      const Value zero = domain_.zero();
      for (const Value& reg : registers) {
        if (!(reg == zero)) {
          throw std::logic_error("register file not clean after walk");
        }
      }
    }
    return result;
  }

  D domain_;
  const CompiledProgram* program_;
  BoundProgram bound_;
  bool check_registers_ = false;

  bool has_cached_point_ = false;
  std::vector<Value> cached_point_;
  std::vector<PowerTable<Value>> tables_;
};

/// One-shot convenience wrapper around an Evaluator session.
template <RingDomain D>
typename D::Value evaluate(const CompiledProgram& program,
                           std::span<const typename D::Value> point,
                           const D& domain) {
  Evaluator<D> session(domain, program);
  return session.evaluate(point);
}

/// One-shot parallel evaluation.
template <RingDomain D>
typename D::Value evaluate_parallel(const CompiledProgram& program,
                                    std::span<const typename D::Value> point,
                                    const D& domain, unsigned workers) {
  Evaluator<D> session(domain, program);
  return session.evaluate_parallel(point, workers);
}

}  // namespace polyeval
