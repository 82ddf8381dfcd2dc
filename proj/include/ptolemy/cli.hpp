#pragma once

#include <ostream>
#include <span>
#include <string>

#include "ptolemy/io.hpp"
#include "ptolemy/verify.hpp"

namespace ptolemy::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
};

enum class Format { text, structured };

int cmd_expand(const ProblemSpec& spec, Format format, std::ostream& out);
int cmd_paths(const ProblemSpec& spec, Format format, std::ostream& out);
int cmd_verify(int n, VerifyLevel level, unsigned jobs, Format format, std::ostream& out);
int cmd_matrix(const ProblemSpec& spec, Format format, std::ostream& out);
int cmd_triangulations(int n, Format format, std::ostream& out);
int cmd_graph(int n, Format format, std::ostream& out);

// Full command line without the program name, e.g. {"expand", "--n", "5", ...}.
// Input and resource errors are reported on `err` and mapped to kInputError.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ptolemy::cli
