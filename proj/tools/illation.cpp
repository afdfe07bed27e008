#include "illation/cli.hpp"

#include <cstdlib>
#include <iostream>

int main( int argc, char** argv )
{
    std::vector< std::string > args( argv + 1, argv + argc );
    illation::cli::environment env{ illation::cli::locale_declares_utf8(
        std::getenv( "LC_ALL" ), std::getenv( "LC_CTYPE" ), std::getenv( "LANG" ) ) };
    return illation::cli::run( args, std::cin, std::cout, std::cerr, env );
}
