#pragma once

namespace schottky::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // certify: some inequality did not hold
  kBadConfig = 2,    // unparsable flags, config file, word or values
  kIoError = 3,
};

int run(int argc, char** argv);

}  // namespace schottky::cli
