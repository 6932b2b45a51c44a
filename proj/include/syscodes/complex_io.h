#ifndef SYSCODES_COMPLEX_IO_H
#define SYSCODES_COMPLEX_IO_H

#include <optional>
#include <string>
#include <string_view>

#include "syscodes/chain_complex.h"
#include "syscodes/css.h"

namespace syscodes {

/// Contents of a JSON input file: a cell complex
///
///   {"dims": [V, E, F], "boundary": [[[0, 1], ...], [[0, 2, 3, 5], ...]],
///    "labels": [["v0", ...], ...], "closed_surface": true}
///
/// where boundary[p-1][c] lists the (p-1)-cells on the boundary of p-cell c
/// (an index listed twice cancels), or a CSS code given by its two bases
///
///   {"n": 4, "v1": [[0, 1, 2, 3]], "v2": [[0, 1, 2, 3]]}.
struct InputFile {
    std::optional<CellComplex> complex;
    std::optional<CssCode> css;
};

/// Parse errors name the offending field, e.g. "boundary[1][3]".
InputFile parse_input(std::string_view json_text);
InputFile load_input(const std::string &path);

std::string complex_to_json(const CellComplex &c);

}  // namespace syscodes

#endif
