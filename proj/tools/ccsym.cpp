#include <iostream>

#include "ccsym/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    ccsym::CliResult r = ccsym::run_cli(std::move(args));
    std::cout << r.output;
    return r.exit_code;
}
