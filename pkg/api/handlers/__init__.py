"""子命令处理器包。"""
