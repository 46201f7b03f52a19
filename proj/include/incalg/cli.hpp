#pragma once

// Input documents and the command driver behind the incalg executable.
//
// Document grammar, one statement per line ('#' starts a comment):
//
//   elements: a b c d
//   cover: a c
//   map NAME kind=involution: a->d b->c c->b d->a
//   unit NAME: (a,a)=1 (b,b)=2 (a,b)=1/2
//   mult NAME: (a,c)=1 (a,d)=1 (b,c)=2 (b,d)=1
//
// `kind` is involution, automorphism or anti-automorphism. Unit entries left
// out are 0 off the diagonal; every diagonal entry must be given and
// nonzero. Mult entries must cover every covering pair; the rest follow
// multiplicatively (diagonal entries are 1), and any that are given must
// agree.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "incalg/classify.hpp"

namespace incalg {

struct InputDocument {
    struct Entry {
        std::string row;
        std::string column;
        std::string value;
    };
    struct MapBlock {
        int line = 0;
        std::string name;
        std::string kind;
        std::vector<std::pair<std::string, std::string>> assignments;
    };
    struct EntryBlock {
        int line = 0;
        std::string name;
        std::vector<Entry> entries;
    };

    int elements_line = 0;
    std::vector<std::string> elements;
    std::vector<std::pair<int, std::pair<std::string, std::string>>> covers;
    std::vector<MapBlock> maps;
    std::vector<EntryBlock> units;
    std::vector<EntryBlock> mults;
};

/// Errc::syntax_error with the offending line number in the message.
InputDocument parse_document(std::string_view text);

/// The document's objects over a field.
struct ResolvedDocument {
    Poset poset;
    std::map<std::string, PosetMap> maps;
    std::map<std::string, Unit> units;
    std::map<std::string, MultiplicativeElement> mults;
};

/// Errc::semantic_error (unknown label, non-cover pair, non-bijective map,
/// non-unit, ...) with the line number in the message.
ResolvedDocument resolve(const InputDocument& doc, Field field);

struct RunOptions {
    std::string command;
    Field field = Field::prime(3);
    int max_size = 10;
    std::uint64_t bound = default_search_bound;
    std::uint64_t seed = 1;
    std::string lambda;
    std::string sigma;
    std::string rho;
    std::string eta;
};

struct RunResult {
    std::string output;
    std::string errors;
    int exit_code = 0;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_bound_exceeded = 3;

/// Runs one command. `document` may be absent only for `verify`, which then
/// uses every poset of at most max_size elements up to isomorphism.
/// Output is `dotted.key = value` lines.
RunResult run(const RunOptions& options, const std::optional<std::string>& document);

int exit_code_for(Errc code);

} // namespace incalg
