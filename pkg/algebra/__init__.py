# Empty file to make algebra a package
