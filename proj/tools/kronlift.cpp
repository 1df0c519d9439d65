#include "kronlift/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kronlift::run(args, std::cin, std::cout, std::cerr);
}
