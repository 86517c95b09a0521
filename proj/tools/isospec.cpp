#include "commands.hpp"

int main(int argc, char** argv) { return isospec::cli::run(argc, argv); }
