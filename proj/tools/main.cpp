#include <iostream>
#include <string>
#include <vector>

#include "eigencount/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eigencount::run_cli(args, std::cout, std::cerr);
}
