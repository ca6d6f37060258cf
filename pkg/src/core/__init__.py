"""Configuration, hardware limits, errors and JSON codecs"""
