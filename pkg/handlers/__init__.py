# Empty file to make handlers a package
