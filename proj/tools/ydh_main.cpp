#include "ydh/iocli.hpp"

int main(int argc, char** argv) { return ydh::cli_main(argc, argv); }
