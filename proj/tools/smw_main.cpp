// Process entry point: everything lives in the library so tests can run
// invocations in-process.

#include "smw/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return smw::cli::run(args, std::cout, std::cerr);
}
