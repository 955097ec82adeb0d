#pragma once

#include "chibound/errors.hpp"
#include "chibound/generators.hpp"
#include "chibound/verify.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chibound::cli {

enum class Subcommand { Check, Invariants, Decompose, VerifyBound, Generate, Remark };
enum class OutputFormat { Json, Text };

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFinding = 1,      // bound violation or structure-claim failure
    kInvalidInput = 2,
    kInternal = 3,     // e.g. the two chromatic engines disagree
};

struct InputSource {
    enum class Kind { Inline, File, Stdin };
    Kind kind = Kind::Inline;
    std::string value;  // graph6 text or file path
};

struct Command {
    Subcommand subcommand = Subcommand::Check;
    std::optional<InputSource> input;
    OutputFormat format = OutputFormat::Json;

    // decompose
    std::optional<Edge> anchor;
    bool force = false;

    // verify-bound
    CampaignConfig campaign;
    std::optional<std::string> out_path;
    bool timing = false;

    // generate
    GeneratorSpec spec = CycleSpec{5};

    // remark
    int k_max = 3;

    /// Set when --help was requested; execute() prints it and exits 0.
    std::optional<std::string> help;
};

/// Thrown by parse_args; the message names the offending flag.
class UsageError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// args excludes the program name.
Command parse_args(const std::vector<std::string>& args);

int execute(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err);

/// parse_args + execute with the exit-code mapping applied to every error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chibound::cli
