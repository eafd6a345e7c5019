#pragma once

#include "sigma_roots/errors.hpp"
#include "sigma_roots/local.hpp"
#include "sigma_roots/sigma.hpp"
#include "sigma_roots/tame.hpp"

#include <optional>
#include <vector>

namespace sigma_roots {

enum class SeedMode {
    Minimal,   ///< coordinatewise-minimal eligible roots
    RealRoots, ///< every eligible real root
};

/// Starting set of the genetic closure.
std::vector<DimVector> seeds(const Quiver& q, const Weight& l, const DimVector& bound,
                             SeedMode mode = SeedMode::Minimal);

struct CertPart {
    std::int64_t coefficient;
    DimVector dim;
    bool operator==(const CertPart&) const = default;
};

/// target = sum e_u b_u, where part u sits on vertex u of `setting` and
/// e_u = delta_u. Equal parts repeat only when p(b) > 0.
struct GeneticCert {
    DimVector target;
    std::vector<CertPart> parts;
    TameSetting setting;
    std::size_t depth = 0;
};

/// Re-checks a certificate from scratch: the sum, the repeat rule, e == delta
/// and the edge condition setting.edges(u, v) <= -sym(b_u, b_v).
bool valid_certificate(const Quiver& q, const GeneticCert& cert);

struct ClosureMember {
    DimVector dim;
    std::size_t depth = 0;
    std::optional<GeneticCert> cert; ///< empty for seeds
};

struct GeneticOptions {
    SeedMode seed_mode = SeedMode::Minimal;
    std::uint64_t budget = kDefaultBudget;
    int refine_threshold = 0;
    unsigned threads = 1;
};

/// Raised when the closure search runs out of nodes; keeps what was built.
class GeneticBudgetExceeded : public BudgetExceeded {
public:
    GeneticBudgetExceeded(std::size_t round, std::vector<ClosureMember> partial);
    std::size_t round() const { return round_; }
    const std::vector<ClosureMember>& partial() const { return partial_; }

private:
    std::size_t round_;
    std::vector<ClosureMember> partial_;
};

/// Least set inside [0, bound] that contains the seeds and every
/// sum_u delta_u b_u with the b_u in the set placed on the vertices of a tame
/// setting so that each diagram edge is dominated by -sym between its ends.
/// Rounds are batched: round r only uses members found before it, so each
/// member's depth is its minimal derivation depth. Canonical order.
std::vector<ClosureMember> genetic_closure(const Quiver& q, const Weight& l, const DimVector& bound,
                                           const GeneticOptions& options = {});

struct IrreducibleResult {
    bool holds = false;
    std::optional<RepType> failing; ///< first failing type in canonical order
    std::size_t types_checked = 0;
};

/// For every non-trivial representation type t of a, refine it and look for
/// a tame setting in (G_B', multiplicities of t'). When a has no non-trivial
/// type, holds iff a is an eligible root (the only possible type is (1, a)).
IrreducibleResult irreducible_sigma_check(const SigmaSolver& solver, const DimVector& a,
                                          std::uint64_t budget = kDefaultBudget, int refine_threshold = 0);
IrreducibleResult irreducible_sigma_check(const Quiver& q, const Weight& l, const DimVector& a,
                                          std::uint64_t budget = kDefaultBudget, int refine_threshold = 0);

struct CompareRecord {
    DimVector alpha;
    SigmaVerdict verdict;
    std::optional<ClosureMember> closure;        ///< set iff alpha is in the closure
    std::optional<IrreducibleResult> irreducible; ///< empty if the check failed
    std::string error;                            ///< budget or precondition failure text

    bool discrepancy() const;
};

struct CompareReport {
    std::vector<DimVector> sigma;
    std::vector<DimVector> genetic;
    std::vector<DimVector> irreducible;
    std::vector<ClosureMember> closure;
    std::vector<CompareRecord> records; ///< every nonzero alpha of the box
    std::string closure_error;

    std::vector<const CompareRecord*> discrepancies() const;
};

/// Runs the three descriptions side by side. Reports, never asserts.
CompareReport compare(const Quiver& q, const Weight& l, const DimVector& bound, const GeneticOptions& options = {});

} // namespace sigma_roots
