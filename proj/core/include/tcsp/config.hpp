#pragma once

#include <cstdint>

namespace tcsp {

inline constexpr const char* kVersion = "1.0.0";

// Size limits for the exhaustive kernels. Exceeding a cap is a hard error,
// never a silent truncation.
struct Config {
    int max_arity = 6;       // relation arity
    int max_oracle_vars = 8; // variables in a satisfiability oracle call
    int max_eval_vars = 12;  // free + bound variables in pp-formula evaluation

    static Config& global() {
        static Config instance;
        return instance;
    }

    // Derives the secondary caps from a single base arity cap.
    static Config scaled(int arity_cap) {
        Config c;
        c.max_arity = arity_cap;
        c.max_oracle_vars = arity_cap + 2;
        c.max_eval_vars = 2 * arity_cap;
        return c;
    }
};

} // namespace tcsp
