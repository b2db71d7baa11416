#ifndef CBSERIES_VERSION_HPP
#define CBSERIES_VERSION_HPP

#define CBSERIES_VERSION "0.1.0"

#endif
