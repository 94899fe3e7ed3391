#pragma once

#include <iosfwd>
#include <string>

namespace gsf {

// Three-valued verdict for order/membership predicates. Asymptotic relations
// are only semidecidable from finitely many grid samples, so every predicate
// documents exactly which evidence yields Undetermined.
enum class Trilean { False = 0, True = 1, Undetermined = 2 };

inline bool is_true(Trilean t) { return t == Trilean::True; }
inline bool is_false(Trilean t) { return t == Trilean::False; }

inline const char* to_string(Trilean t) {
    switch (t) {
        case Trilean::False: return "false";
        case Trilean::True: return "true";
        default: return "undetermined";
    }
}

std::ostream& operator<<(std::ostream& os, Trilean t);

} // namespace gsf
