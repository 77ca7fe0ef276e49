#pragma once

#include <optional>

#include "tcsp/cnf.hpp"
#include "tcsp/relation.hpp"

namespace tcsp {

// Syntactic clause languages characterizing preservation by pp, min, mi, ll
// and mix respectively.
enum class Form { pp, min, mi, ll, mix };

const char* form_name(Form f);
Form parse_form(const std::string& name);

// Purely syntactic pattern match per clause. A mix-form match may pair two
// clauses into one x/y-symmetric block. Literals may be written in either
// orientation; they are normalized before matching.
bool recognize_form(const OrderCNF& formula, Form form);

// Searches the clause language of the requested form for a reduced CNF
// defining R. Success is equivalent to preservation of R by the form's
// operation. ll-form synthesis is not provided (recognizer only).
std::optional<OrderCNF> synthesize_form(const TemporalRelation& r, Form form);

} // namespace tcsp
