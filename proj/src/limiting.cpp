// placeholder, implementation pending
