#include "commands.hpp"

int main(int argc, char** argv) { return mst::cli::run(argc, argv); }
