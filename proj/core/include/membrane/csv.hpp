#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "membrane/function_pair.hpp"
#include "membrane/scaling.hpp"
#include "membrane/sharp_function.hpp"

namespace membrane {

/// CSV exchange formats. Values are printed with 17 significant digits, which
/// round-trips IEEE doubles bit-exactly.
///   LineFunction:  header "x,value"; a "-inf,<limit>" row, one row per node,
///                  a "+inf,<limit>" row.
///   SharpFunction: header "x,side,value" with side L/R; both one-sided rows
///                  are present at x = 0; the +-inf rows carry the limits.
///   FunctionPair:  header "x,f1,f2" with +-inf rows carrying both limits.
///   Ladder:        header "n,error".

void write_line_csv(std::ostream& os, const LineFunction& f);
void write_sharp_csv(std::ostream& os, const SharpFunction& f);
void write_pair_csv(std::ostream& os, const FunctionPair& p);
void write_ladder_csv(std::ostream& os, const LadderReport& rep);

LineFunction read_line_csv(std::istream& is);
SharpFunction read_sharp_csv(std::istream& is);
FunctionPair read_pair_csv(std::istream& is);

void write_line_csv_file(const std::string& path, const LineFunction& f);
void write_sharp_csv_file(const std::string& path, const SharpFunction& f);
void write_pair_csv_file(const std::string& path, const FunctionPair& p);
void write_ladder_csv_file(const std::string& path, const LadderReport& rep);

LineFunction read_line_csv_file(const std::string& path);
SharpFunction read_sharp_csv_file(const std::string& path);
FunctionPair read_pair_csv_file(const std::string& path);

}  // namespace membrane
