#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psc/multilevel.hpp"
#include "psc/subspace_code.hpp"

namespace psc {

// Text format, one codeword per line:
//
//   # version=1
//   # q=2
//   # n=6
//   # k=3            (k=mixed when dimensions differ)
//   # d=4
//   # size=71
//   # fiber v=111000 dim=6 bound=6 size=64 trial=0 preferred=0
//   100011;010101;001110
//
// A codeword is its canonical generator, rows as digit strings joined by ';'.
// The zero subspace is written as '-'.

struct CodeFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedCode {
    SubspaceCode code;
    std::vector<std::string> warnings;
};

std::string emit_code(const SubspaceCode& code);

/// Rows that are not in reduced echelon form are re-canonicalized and
/// duplicate codewords dropped, each with a warning. Throws CodeFileError on
/// malformed input or header mismatches.
ParsedCode parse_code(std::string_view text);

std::string emit_skeleton(const SkeletonCode& skeleton);
/// One binary word per line; '#' lines are ignored. Length and weight are
/// taken from the words; min_distance is the smallest pairwise distance.
SkeletonCode parse_skeleton(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace psc
