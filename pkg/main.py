"""rpr-atlas 命令行入口（python main.py <子命令> ...）。"""

from api.cli import main

if __name__ == "__main__":
    main()
