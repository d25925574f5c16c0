#include "cli.hpp"

int main(int argc, char** argv) {
    return swcol::run_cli(argc, argv);
}
