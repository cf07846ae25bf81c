# Empty file to make jobs a package
