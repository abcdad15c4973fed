#ifndef CONFLICT_SOLVE_RESULT_HH
#define CONFLICT_SOLVE_RESULT_HH

#include <conflict/instance.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace conflict
{
    /**
     * Solver outcomes. Only the exact solver can say unsatisfiable; the
     * randomized solvers report cap_exhausted or failed instead.
     */
    enum class Verdict
    {
        colourable,
        unsatisfiable,
        budget_exhausted,
        cap_exhausted,
        not_applicable,
        failed
    };

    auto verdict_name(Verdict verdict) -> std::string_view;

    struct SolveResult
    {
        Verdict verdict = Verdict::failed;
        std::optional<Colouring> colouring;
        std::uint64_t nodes = 0;
        std::uint64_t resamples = 0;
        int attempts = 1;
        std::string diagnostic;

        auto success() const -> bool { return verdict == Verdict::colourable; }
    };
}

#endif
