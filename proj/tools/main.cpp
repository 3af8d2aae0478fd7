#include <exception>
#include <iostream>

#include "tempo/cli.hpp"

int main(int argc, char** argv) {
    try {
        return tempo::cli_main(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
}
