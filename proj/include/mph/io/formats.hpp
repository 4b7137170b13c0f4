#pragma once

#include <iosfwd>
#include <string>

#include "mph/bifilt/chain_complex.hpp"
#include "mph/present/presentation.hpp"

namespace mph::io {

/// `bifcc v1`: the free chain complex F2 -> F1 -> F0 in stored coordinates (reversed
/// axes negated). ParseError carries the 1-based line number.
bifilt::FreeChainComplex read_bifcc(std::istream& in);
void write_bifcc(std::ostream& out, const bifilt::FreeChainComplex& c);

/// `mpres v1`. An `axes` line between `hom` and `rows` is accepted and written only when
/// the axes differ from the defaults.
present::Presentation read_mpres(std::istream& in);
void write_mpres(std::ostream& out, const present::Presentation& p);

bifilt::FreeChainComplex load_bifcc(const std::string& path);
present::Presentation load_mpres(const std::string& path);

}  // namespace mph::io
