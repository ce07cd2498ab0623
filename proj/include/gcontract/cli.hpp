#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcontract {

/// Exit codes of run_cli.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1, ///< invalid input or failed verification
  kExitUsage = 2,
};

/**
   Command-line entry point. args[0] is the program name. "-" as a file name
   means `in` or `out`.

     contract <in|-> [--out F] [--stats F|-] [--trace] [--permute-seed S]
              [--scratchpad faithful|epoch]
     oracle <in|-> [--out F]
     verify <in|-> [--seeds S...]
     gen fib --level I [--roles] [--out F]
     gen random --n N (--m M | --p P) --colours C --seed S [--out F]
     export-dot <in|-> [--roles] [--out F]
     bench --n N --m M --colours C --seeds K [--first-seed S]
           [--scratchpad faithful|epoch] [--serial] [--out F]
 */
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace gcontract
