"""
skeinkit 核心包：图表、着色、代数、括号引擎、公理验证，以及把它们串起来的运行器
"""
