#ifndef CONFLICT_LEMMA_CHECK_HH
#define CONFLICT_LEMMA_CHECK_HH

namespace conflict
{
    /**
     * The three local-lemma conditions behind phase A of the two-phase
     * pipeline, evaluated at degree scale d with the event weights 2^-7/d
     * (vertex-without-colour and edge-conflict events) and
     * 2 exp(-2^-6 sqrt d) (overloaded-neighbour events). A slack is
     * right-hand side minus left-hand side; a condition holds when its slack
     * is nonnegative.
     */
    struct LemmaFeasibility
    {
        bool holds;
        double uncoloured_slack;
        double edge_conflict_slack;
        double overload_slack;
    };

    auto lll_feasibility_check(double d) -> LemmaFeasibility;
}

#endif
