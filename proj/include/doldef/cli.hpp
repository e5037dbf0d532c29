#ifndef DOLDEF_CLI_HPP
#define DOLDEF_CLI_HPP

#include <iosfwd>

#include "doldef/identities.hpp"
#include "doldef/models.hpp"

namespace doldef {

/// Parses "t11=1/2,t22=-1/3" (or "0" / "" for the origin) into a point over
/// the model's parameters.
std::vector<GaussRational> parse_point(const ModelSpec& m, const std::string& s);

/// Parses a class expression in the generator grammar, e.g. "f2^f3",
/// "1/2 * f1^fb1 - f2^fb2", "fb1 (x) v1", "t-free coefficients only".
TensorForm parse_class_expr(const ModelSpec& m, const BundleSpec& bundle, const std::string& s);

/// The Beltrami series every subcommand operates under: the model's declared
/// phi(t) when present (always re-checked through the residual), otherwise
/// the Kuranishi recursion.
BeltramiSeries model_beltrami(const HodgeContext& ctx, int order);

/// Full command-line entry point; argv excludes the program name.
/// Exit codes: 0 success, 1 usage, 2 invalid model, 3 computation refused.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace doldef

#endif
